import csv
from collections import namedtuple
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union, IO

__all__ = ['ResultSet']


class ResultSet(object):
    """
    Check or invariant rows of a suite run, one namedtuple per row. It:
    1) Holds its rows from creation on. Iterating again doesn't recompute anything
    2) Is immutable: filter() and slicing build a new ResultSet, accessors return plain lists
    3) Reads fields by name, exports CSV with true / false booleans
    """
    def __init__(self, fields, rows=()):
        # type: (Sequence[str], Iterable[Union[Sequence[Any], Dict[str, Any]]]) -> None
        self._fields = tuple(fields)
        self._row_class = namedtuple('Row', self._fields)
        self._result_cache = [self._make_row(row) for row in rows]

    def _make_row(self, row):
        if isinstance(row, dict):
            return self._row_class(**row)
        return self._row_class(*row)

    def _check_fields(self, fields):  # type: (Iterable[str]) -> None
        unknown = set(fields) - set(self._fields)
        if unknown:
            raise ValueError('Unknown fields %s, rows have %s' % (sorted(unknown), list(self._fields)))

    def __len__(self):
        return len(self._result_cache)

    def __iter__(self):
        return iter(self._result_cache)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return ResultSet(self._fields, self._result_cache[k])
        return self._result_cache[k]

    def __repr__(self):
        return 'ResultSet(fields=%s, rows=%d)' % (list(self._fields), len(self))

    @property
    def fields(self):  # type: () -> Tuple[str, ...]
        return self._fields

    def count(self):  # type: () -> int
        return len(self._result_cache)

    def filter(self, **conditions):  # type: (**Any) -> ResultSet
        """
        Rows whose fields equal all the given values
        :raises ValueError: If a condition names an unknown field
        """
        self._check_fields(conditions)
        return ResultSet(self._fields, [row for row in self._result_cache
                                        if all(getattr(row, f) == v for f, v in conditions.items())])

    def values(self, *fields):  # type: (*str) -> List[Dict[str, Any]]
        """
        :param fields: Fields to get. If not given, all fields are fetched.
        :return: A dict per row, ready for JSON output
        """
        fields = fields or self._fields
        self._check_fields(fields)
        return [{f: getattr(row, f) for f in fields} for row in self._result_cache]

    def values_list(self, *fields):  # type: (*str) -> List[Tuple[Any, ...]]
        """
        A tuple of the given fields per row, in row order
        :raises ValueError: Without fields, or for an unknown one
        """
        if not fields:
            raise ValueError('values_list needs at least one field')
        self._check_fields(fields)
        return [tuple(getattr(row, f) for f in fields) for row in self._result_cache]

    def column(self, field):  # type: (str) -> List[Any]
        self._check_fields([field])
        return [getattr(row, field) for row in self._result_cache]

    def distinct(self, field):  # type: (str) -> List[Any]
        """
        Values of a field without repeats, in first appearance order
        """
        seen = set()
        result = []
        for value in self.column(field):
            if value not in seen:
                seen.add(value)
                result.append(value)
        return result

    def to_csv(self, stream):  # type: (IO[str]) -> None
        """
        Writes a header row and one line per row. Booleans are written as true / false.
        """
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(self._fields)
        for row in self._result_cache:
            writer.writerow([_csv_value(v) for v in row])


def _csv_value(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return '' if value is None else value
