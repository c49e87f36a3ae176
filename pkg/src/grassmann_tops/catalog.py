"""Worked examples: three [10,5]_2 codes differing in one column and one [6,4]_2 code.

``expected`` holds the published outcome for each generator: the set Y, the
line classification and the top / star verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field


def _bits(*rows: str) -> list[list[int]]:
    return [[int(c) for c in row.split()] for row in rows]


@dataclass(frozen=True)
class Example:
    name: str
    q: int
    rows: list[list[int]]
    expected: dict = field(default_factory=dict)


EXAMPLE_A = Example(
    "10-5-a",
    2,
    _bits(
        "1 0 0 0 0 1 0 1 1 0",
        "0 1 0 0 0 1 0 0 0 1",
        "0 0 1 0 0 0 1 1 0 0",
        "0 0 0 1 0 0 1 0 1 0",
        "0 0 0 0 1 0 0 0 1 1",
    ),
    {
        "y_vectors": [[1, 1, 1, 1, 1]],
        "line_kind": "ManyLines",
        "is_top": False,
        "is_star_too": False,
    },
)

EXAMPLE_B = Example(
    "10-5-b",
    2,
    _bits(
        "1 0 0 0 0 1 0 1 1 0",
        "0 1 0 0 0 1 0 0 0 1",
        "0 0 1 0 0 0 1 1 0 1",
        "0 0 0 1 0 0 1 0 1 0",
        "0 0 0 0 1 0 0 0 1 0",
    ),
    {
        "y_vectors": [[0, 1, 1, 1, 1], [1, 1, 1, 0, 1]],
        "line_kind": "OneLine",
        "is_top": False,
        "is_star_too": False,
    },
)

EXAMPLE_C = Example(
    "10-5-c",
    2,
    _bits(
        "1 0 0 0 0 1 0 1 1 0",
        "0 1 0 0 0 1 0 0 0 1",
        "0 0 1 0 0 0 1 1 0 0",
        "0 0 0 1 0 0 1 0 1 1",
        "0 0 0 0 1 0 0 0 1 0",
    ),
    {
        "y_vectors": [[0, 1, 1, 0, 1], [0, 1, 1, 1, 1], [1, 1, 1, 0, 1], [1, 1, 1, 1, 1]],
        "line_kind": "NoLine",
        "is_top": True,
        "is_star_too": False,
    },
)

EXAMPLE_D = Example(
    "6-4",
    2,
    _bits(
        "1 0 0 0 1 1",
        "0 1 0 0 1 0",
        "0 0 1 0 0 1",
        "0 0 0 1 1 1",
    ),
    {
        "y_vectors": [[0, 1, 1, 1], [1, 1, 1, 0]],
        "line_kind": "OneLine",
        "is_top": True,
        "is_star_too": True,
    },
)

EXAMPLES = [EXAMPLE_A, EXAMPLE_B, EXAMPLE_C, EXAMPLE_D]

# Generators printed alongside the examples, as row lists over F_2.
CODE_A_CY = _bits(
    "1 1 0 0 0 0 0 1 1 1",
    "0 1 1 0 0 1 1 1 0 1",
    "0 0 1 1 0 0 0 1 1 0",
    "0 0 0 1 1 0 1 0 0 1",
)
WITNESS_A = _bits(
    "1 1 0 0 0 0 0 1 1 1",
    "0 1 1 0 0 1 1 1 0 1",
    "0 0 1 1 0 0 0 1 1 0",
    "0 0 0 1 1 0 1 1 1 1",
)
CORE_B = _bits(
    "0 1 1 0 0 1 1 1 0 0",
    "0 1 0 0 1 1 0 0 1 1",
    "1 1 0 1 0 0 1 1 0 1",
)
WITNESS_B = CORE_B + _bits("0 0 0 1 0 0 0 1 1 0")
CORE_D = _bits(
    "1 1 0 1 1 0",
    "0 1 1 0 1 1",
)
