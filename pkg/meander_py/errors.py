"""Exception hierarchy for meander-py."""

from typing import Optional, Sequence


class MeanderError(Exception):
    """Base class for all meander-py errors."""


class CompositionError(MeanderError):
    """Bad composition-pair text.

    Args:
        message: Human readable description
        text: The offending input text
        position: 0-based column the caret should point at
    """

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.text = text
        self.position = position

    def caret(self) -> str:
        """Return the input line with a caret under the error position."""
        if self.position is None:
            return self.text
        return f"{self.text}\n{' ' * self.position}^"


class MalformedInput(CompositionError):
    """Text does not match the pair grammar."""


class SumMismatch(CompositionError):
    """The two sides of a pair sum to different n."""


class EmptyComposition(CompositionError):
    """Every part on one side is zero."""


class OutOfRange(MeanderError):
    """A value lies outside its allowed interval."""

    def __init__(self, name: str, value: int, low: int, high: Optional[int] = None):
        bound = f"[{low}, {high}]" if high is not None else f">= {low}"
        super().__init__(f"{name}={value} is out of range {bound}")
        self.name = name
        self.value = value
        self.low = low
        self.high = high


class NotAPathComponent(MeanderError):
    """The given vertices are not a path component of the meander."""

    def __init__(self, vertices: Sequence[int]):
        super().__init__(f"{tuple(vertices)} is not a path component")
        self.vertices = tuple(vertices)


class OracleError(MeanderError):
    """Base class for linear-algebra oracle failures."""


class InvalidModulus(OracleError):
    """The modulus cannot serve as the prime field."""

    def __init__(self, prime: int, reason: str):
        super().__init__(f"modulus {prime} rejected: {reason}")
        self.prime = prime


class SingularForm(OracleError):
    """The Kirillov form matrix is not invertible."""

    def __init__(self, rank: int, dim: int):
        super().__init__(f"form matrix has rank {rank} < {dim}")
        self.rank = rank
        self.dim = dim


class DegenerateTrials(OracleError):
    """Every trial stayed below a rank that is known to be attainable."""

    def __init__(self, best_rank: int, certified_rank: int, trials: int):
        super().__init__(
            f"best rank {best_rank} over {trials} trials is below "
            f"certified rank {certified_rank}; increase --trials"
        )
        self.best_rank = best_rank
        self.certified_rank = certified_rank
        self.trials = trials


class TheoremViolation(MeanderError):
    """A closed-form verdict disagrees with the meander verdict."""

    def __init__(self, pair, family: str, closed_form: Optional[bool], meander: bool):
        super().__init__(
            f"{family}: pair {pair} closed_form={closed_form} meander={meander}"
        )
        self.pair = pair
        self.family = family
        self.closed_form = closed_form
        self.meander = meander
