"""Exception hierarchy for the emordle engine."""


class EmordleError(Exception):
    """Base class for all engine errors."""


# ---- word list ingestion ----

class EmptyInput(EmordleError):
    """CSV input contained no records."""


class MalformedRow(EmordleError):
    """A CSV row could not be parsed (wrong column count, bad number, ...)."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NonPositiveWeight(MalformedRow):
    """A word weight was zero or negative."""


class TooManyWords(EmordleError):
    """Word list exceeds the hard cap (animations with hundreds of words are illegible)."""


# ---- layout ----

class PlacementFailure(EmordleError):
    """No non-overlapping placement found; the canvas is too small for the word set."""


# ---- animation math ----

class DomainError(EmordleError):
    """Argument outside the function's domain (e.g. easing time outside [0, 1])."""


class NonPositiveDuration(EmordleError):
    """Loop duration must be > 0."""


# ---- grouping ----

class GroupCountOutOfRange(EmordleError):
    """Requested group count not in [1, word count]."""


# ---- schemes ----

class UnknownScheme(EmordleError):
    """Scheme id not found in the registry."""


class SchemeSyntaxError(EmordleError):
    """Scheme file is not syntactically valid."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class SchemeValidationError(EmordleError):
    """Scheme file parsed but violates a template invariant."""


# ---- rendering / export ----

class FontLoadError(EmordleError):
    """Typeface could not be resolved or loaded."""


class MissingGlyph(EmordleError):
    """The chosen typeface has no glyph for a character."""

    def __init__(self, word: str, char: str):
        self.word = word
        self.char = char
        super().__init__(f"no glyph for {char!r} (U+{ord(char):04X}) in word {word!r}")


class DimensionMismatch(EmordleError):
    """Frames in a sequence do not share one size."""


class SchemaError(EmordleError):
    """A serialized document violates its schema; ``path`` names the field."""

    def __init__(self, path: str, message: str = "missing or invalid"):
        self.path = path
        super().__init__(f"{path}: {message}")
