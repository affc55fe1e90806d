"""
Transport of algebraic structures along adjunctions, verified
exhaustively on finite sets and finite topological spaces.
"""
