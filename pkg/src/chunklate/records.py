"""JSON Lines reading shared by the data-file loaders."""

import json
import typing as ty

from chunklate.errors import DataFileError


def source_name(source: ty.Any) -> str:
    return str(getattr(source, "name", "<stream>"))


def json_records(source: ty.Iterable[str]) -> ty.Iterator[tuple[int, dict[str, ty.Any]]]:
    """Yield ``(line_number, record)`` for every non-blank JSON Lines record.

    :raise DataFileError: when a line cannot be decoded or is not a JSON object.
    """
    name = source_name(source)
    lines = iter(source)
    line_number = 0
    while True:
        try:
            line = next(lines)
        except StopIteration:
            return
        except UnicodeDecodeError as e:
            raise DataFileError(f"invalid UTF-8: {e.reason}", name, line_number + 1) from e
        line_number += 1
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as e:
            raise DataFileError(f"malformed record: {e.msg}", name, line_number) from e
        if not isinstance(record, dict):
            raise DataFileError("a record must be a JSON object", name, line_number)
        yield line_number, record
