"""
Print an elaborated document back to source text. Parsing the output
gives back an equal document.
"""

import itertools

from structura.equational.terms import render_term

VARIABLE_NAMES = ("x", "y", "z", "u", "v", "w")


def variable_names(signature, count):
    """Names for x0..x{count-1} that do not clash with operations."""
    candidates = itertools.chain(
        VARIABLE_NAMES, (f"x{i}" for i in itertools.count(1))
    )
    names = []
    for candidate in candidates:
        if len(names) == count:
            break
        if candidate not in signature:
            names.append(candidate)
    return names


def print_theory(name, presentation):
    lines = [f"theory {name} {{"]
    for symbol, arity in presentation.signature.symbols:
        lines.append(f"    op {symbol}/{arity};")
    if presentation.oracle_hint:
        lines.append(f"    oracle {presentation.oracle_hint};")
    for eq in presentation.identities:
        names = variable_names(presentation.signature, eq.context)
        lines.append(
            f"    eq {render_term(eq.lhs, names)} = "
            f"{render_term(eq.rhs, names)};"
        )
    lines.append("}")
    return lines


def print_set(name, obj):
    points = " ".join(obj.points)
    return [f"set {name} {{", f"    points {points};".replace(" ;", ";"), "}"]


def print_space(name, space):
    points = " ".join(space.points)
    lines = [f"space {name} {{", f"    points {points};".replace(" ;", ";")]
    pairs = space.strict_pairs()
    if pairs:
        order = ", ".join(f"{low}<={high}" for low, high in pairs)
        lines.append(f"    order {order};")
    lines.append("}")
    return lines


def print_structure(document, decl):
    presentation = document.theory(decl.theory)
    carrier, _ = document.carrier(decl.carrier)
    lines = [f"structure {decl.name} : {decl.theory} on {decl.carrier} {{"]
    for symbol, arity in presentation.signature.symbols:
        table = decl.tables[symbol]
        for key in itertools.product(carrier.points, repeat=arity):
            head = f"{symbol}({','.join(key)})" if arity else symbol
            lines.append(f"    {head} = {table[key]};")
    lines.append("}")
    return lines


def print_spec(document):
    blocks = []
    for kind, name in document.order:
        if kind == "theory":
            blocks.append(print_theory(name, document.theories[name]))
        elif kind == "set":
            blocks.append(print_set(name, document.sets[name]))
        elif kind == "space":
            blocks.append(print_space(name, document.spaces[name]))
        else:
            blocks.append(
                print_structure(document, document.structures[name])
            )
    return "\n\n".join("\n".join(block) for block in blocks) + "\n"
