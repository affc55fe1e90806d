class StructuraError(Exception):
    """
    Base exception for any errors raised by structura
    """

    pass


class UnboundVariable(StructuraError):
    """
    A term mentions a variable that has no image under an environment
    or assignment
    """

    def __init__(self, index):
        self.index = index
        return super().__init__(f"variable x{index} is unbound")


class UnknownSymbol(StructuraError):
    """
    An operation symbol is not declared, or has no table
    """

    def __init__(self, symbol):
        self.symbol = symbol
        return super().__init__(f"unknown operation symbol {symbol!r}")


class SignatureMismatch(StructuraError):
    """
    Two algebras or structures are not over the same signature
    """

    pass


class InvalidPresentation(StructuraError):
    """
    A signature or a set of identities is malformed
    """

    pass


class EmptyCarrierError(InvalidPresentation):
    """
    Constants or ground identities were combined with an empty carrier
    """

    pass


class InvalidAlgebra(StructuraError):
    """
    An operation table is not total or leaves the carrier
    """

    pass


class InvalidSpace(StructuraError):
    """
    A relation is not a preorder on the given points
    """

    pass


class CompositionError(StructuraError):
    """
    Two morphisms were composed whose codomain and domain disagree
    """

    pass


class NotAMorphism(StructuraError):
    """
    A value is not a morphism of the category it was used in
    """

    pass


class NotEnumerable(StructuraError):
    """
    The category cannot enumerate the requested objects or hom-set
    """

    pass


class NoProduct(StructuraError):
    """
    No universal cone was found over the requested factors
    """

    pass


class NoMediator(StructuraError):
    """
    A cone admits no mediating morphism for the given legs
    """

    pass


class NonUniqueMediator(StructuraError):
    """
    A cone admits several mediating morphisms for the given legs, so it
    is not a product
    """

    pass


class NotProductPreserving(StructuraError):
    """
    A functor sends a product cone to a cone that is not universal
    """

    pass


class AdjunctionError(StructuraError):
    """
    Unit and counit fail the triangle identities or naturality
    """

    def __init__(self, message, report=None):
        self.report = report
        return super().__init__(message)


class OracleUnsound(StructuraError):
    """
    A word-problem oracle disagrees with the identities it is meant to
    decide
    """

    pass


class InvalidStructure(StructuraError):
    """
    A structured object fails its identity diagrams
    """

    def __init__(self, message, report=None):
        self.report = report
        return super().__init__(message)


class BoundExceeded(StructuraError):
    """
    An enumeration was requested beyond the configured bounds
    """

    pass


class UsageError(StructuraError):
    """
    A command was invoked with incompatible options
    """

    pass


class DocumentError(StructuraError):
    """
    A positioned error in a structura document
    """

    def __init__(self, message, line=None, col=None):
        self.message = message
        self.line = line
        self.col = col
        if line is not None:
            message = f"{line}:{col}: {message}"
        return super().__init__(message)


class DocumentSyntaxError(DocumentError):
    """
    The document does not follow the grammar
    """

    pass


class UnknownName(DocumentError):
    """
    A declaration refers to a name that is not declared
    """

    pass


class ArityMismatch(DocumentError):
    """
    An operation is applied to the wrong number of arguments
    """

    pass


class DocumentErrorList(StructuraError):
    """
    Parsing a document produced errors, which are included in
    self.errors
    """

    def __init__(self, errors):
        self.errors = errors
        return super().__init__("\n".join(str(error) for error in errors))
