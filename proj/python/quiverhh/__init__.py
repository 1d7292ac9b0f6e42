from ._quiverhh import Algebra, HypothesisError, NotCocycleError, ParseError, load, parse

__all__ = ["Algebra", "HypothesisError", "NotCocycleError", "ParseError", "load", "parse"]
