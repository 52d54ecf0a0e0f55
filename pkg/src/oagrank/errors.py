"""Exception hierarchy.

Input problems derive from ``InputError`` (CLI exit code 2); violated internal
invariants raise ``InvariantError`` (exit code 3).
"""


class OagError(Exception):
    pass


class InputError(OagError, ValueError):
    pass


class InvariantError(OagError, AssertionError):
    pass


class ParseError(InputError):
    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class TrivialGroup(ParseError):
    pass


class NonPrimeKey(ParseError):
    pass


class OmegaOfCompound(ParseError):
    pass


class EmptySum(InputError):
    pass


class BadCut(InputError):
    pass


class UnsupportedGroup(InputError):
    pass


class BadSubgroup(InputError):
    pass


class BadBlock(InputError):
    pass


class AmbientMismatch(InputError):
    pass


class NotASubgroupOf(InputError):
    pass


class NotSublattice(InputError):
    pass


class RankMismatch(InputError):
    pass


class NonDiscreteBlock(InputError):
    pass


class InfiniteSpine(OagError):
    def __init__(self, p):
        self.p = p
        super().__init__(f"the {p}-spine is infinite")


class NotFiniteRank(OagError):
    pass


class NotResidueCharP(InputError):
    pass


class NotHenselian(InputError):
    pass


class DescriptorError(InputError):
    pass
