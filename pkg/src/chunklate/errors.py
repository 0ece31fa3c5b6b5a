"""Exceptions raised by the translation engine."""

import typing as ty


class ChunklateError(RuntimeError):
    pass


class DataFileError(ChunklateError):
    """A lexicon, affix or corpus record could not be loaded.

    :param message: description of the problem.
    :param source: name of the stream the record comes from, if known.
    :param line: 1-based line number of the faulty record, if known.
    """

    def __init__(
        self, message: str, source: ty.Optional[str] = None, line: ty.Optional[int] = None
    ):
        self.source = source
        self.line = line
        location = ""
        if source is not None:
            location += f"{source}:"
        if line is not None:
            location += f"{line}:"
        super().__init__(f"{location} {message}" if location else message)


class TemplateSyntaxError(ChunklateError, ValueError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in template {text!r}")


class DanglingReferenceError(ChunklateError):
    def __init__(self, message: str, pair_id: ty.Optional[int] = None):
        self.pair_id = pair_id
        if pair_id is not None:
            message = f"template {pair_id}: {message}"
        super().__init__(message)


class MatrixError(ChunklateError, ValueError):
    pass


class NoPathError(ChunklateError):
    pass
