from typing import Any, Final, Iterable, Optional

CERTIFICATE_FAILURE_HINT: Final[
    str
] = """A re-verification inside rankred failed.
This indicates a bug, please open an issue on Github with the instance that triggered it."""


class RankRedException(Exception):
    """Base exception for custom exceptions raised by rankred"""

    def __init__(self, msg: str):
        super().__init__(msg)
        self.msg = msg

    def __str__(self):
        return self.msg


class InputError(RankRedException):
    """Raised when an input is malformed or violates a documented precondition"""


class ParseError(InputError):
    """Raised when a file cannot be parsed"""

    msg = "{path}:{lineno}: {reason}"

    def __init__(self, path: Any, lineno: int, reason: str):
        self.path = path
        self.lineno = lineno
        super().__init__(self.msg.format(path=path, lineno=lineno, reason=reason))


class InvalidParameterError(InputError, ValueError):
    """Raised when a numeric parameter is out of its admissible range"""

    msg = "Parameter {name}={value} is invalid: {reason}"

    def __init__(self, name: str, value: Any, reason: str):
        self.name = name
        self.value = value
        super().__init__(self.msg.format(name=name, value=value, reason=reason))


class ElementNotInGroundSetError(InputError, KeyError):
    """Raised when a removal set contains an element outside the ground set"""

    msg = "Elements {elements} are not part of the ground set of {model}"

    def __init__(self, elements: Iterable[Any], model: str):
        self.elements = sorted(elements)
        super().__init__(self.msg.format(elements=self.elements, model=model))


class EnumerationCapExceededError(InputError):
    """Raised when an exhaustive search is requested on an instance above the enumeration cap"""

    msg = (
        "{what} has size {size}, above the enumeration cap {cap}. "
        + "Raise the cap with --cap or RANKRED_CAP if you really want to wait."
    )

    def __init__(self, what: str, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(self.msg.format(what=what, size=size, cap=cap))


class GadgetAssumptionError(InputError):
    """Raised when a clique instance does not satisfy the preprocessing assumptions"""

    msg = "Clique instance violates the assumption '{assumption}': {detail}"

    def __init__(self, assumption: str, detail: str):
        self.assumption = assumption
        super().__init__(self.msg.format(assumption=assumption, detail=detail))


class NotMaximumMatchingError(InputError):
    """Raised when a matching handed to the König construction still has an augmenting path"""

    msg = "The matching of size {size} is not maximum: vertex {vertex} ends an augmenting path"

    def __init__(self, size: int, vertex: int):
        super().__init__(self.msg.format(size=size, vertex=vertex))


class NotNiceError(InputError):
    """Raised when a partial vertex cover is expected to be nice but is not"""

    msg = "The partial vertex cover is not nice: {violations}"

    def __init__(self, violations: str):
        super().__init__(self.msg.format(violations=violations))


class NonCanonicalPairError(InputError):
    """Raised when a (solution, witness) pair is not canonical for its gadget"""

    msg = "The pair is not canonical: {reason}"

    def __init__(self, reason: str):
        super().__init__(self.msg.format(reason=reason))


class InfeasibleInstanceError(RankRedException):
    """Raised when an instance has no feasible solution"""


class InfeasibleSolutionError(InfeasibleInstanceError):
    """Raised when a proposed removal set does not reduce the rank enough"""

    msg = "Removal set of size {size} leaves rank {rank_after}, but at most {bound} is required"

    def __init__(self, size: int, rank_after: int, bound: int):
        self.rank_after = rank_after
        self.bound = bound
        super().__init__(self.msg.format(size=size, rank_after=rank_after, bound=bound))


class MatroidOracleError(RankRedException):
    """Raised when an independence oracle behaves inconsistently with the matroid axioms"""

    msg = "Independence oracle {name} is not a matroid: {detail}"

    def __init__(self, name: str, detail: str):
        super().__init__(self.msg.format(name=name, detail=detail))


class StrategyFaultError(RankRedException):
    """Raised when a min t-edge strategy returns an invalid certificate"""

    msg = "Strategy returned {size} vertices inducing {edges} edges for t={t}"

    def __init__(self, t: int, size: int, edges: int, detail: Optional[str] = None):
        msg = self.msg.format(t=t, size=size, edges=edges)
        if detail is not None:
            msg += f" ({detail})"
        super().__init__(msg)


class CertificateError(RankRedException, AssertionError):
    """Raised when a solution fails its own re-verification"""

    def __init__(self, detail: str):
        super().__init__(f"{detail}\n{CERTIFICATE_FAILURE_HINT}")
