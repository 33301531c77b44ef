"""Reading and writing quiver files.

A quiver file is a JSON object, either ``{"n": 3, "arrows": [[1, 2], ...]}``
with 1-based vertices (repeat an arrow for multiplicity) or
``{"b": [[0, 1], [-1, 0]]}``.  Optional keys: ``"name"`` and ``"word"``, a
1-based mutation word applied before use.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import seeds


class QuiverFileError(ValueError):
    """Malformed quiver file; ``position`` says where."""

    def __init__(self, message: str, position: str, source: str = "<input>"):
        self.message = message
        self.position = position
        self.source = source
        super().__init__(f"{source}: {position}: {message}")

    def to_json(self) -> dict:
        return {"error": {"type": "QuiverFileError", "source": self.source, "position": self.position,
                          "message": self.message}}


@dataclass
class QuiverFile:
    b: np.ndarray
    name: str | None = None
    word: tuple[int, ...] = ()        # 0-based

    @property
    def n(self) -> int:
        return self.b.shape[0]

    def mutated_b(self) -> np.ndarray:
        s = seeds.initial_seed(self.b)
        for k in self.word:
            s = seeds.mutate_seed(s, k)
        return s.b

    def to_json(self) -> dict:
        out: dict = {"b": [[int(x) for x in row] for row in self.b]}
        if self.name is not None:
            out["name"] = self.name
        if self.word:
            out["word"] = [k + 1 for k in self.word]
        return out


def _int(x, where: str, source: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise QuiverFileError(f"expected an integer, got {json.dumps(x)}", where, source)
    return x


def arrows_to_b(n: int, arrows) -> np.ndarray:
    b = np.zeros((n, n), dtype=np.int64)
    for i, j in arrows:
        b[i, j] += 1
        b[j, i] -= 1
    return b


def b_to_arrows(b) -> list[tuple[int, int]]:
    b = np.asarray(b)
    return [(i, j) for i in range(b.shape[0]) for j in range(b.shape[0]) for _ in range(max(int(b[i, j]), 0))]


def parse_quiver(data, source: str = "<input>") -> QuiverFile:
    """Validate a decoded JSON document."""
    if not isinstance(data, dict):
        raise QuiverFileError("top level must be a JSON object", "$", source)
    unknown = sorted(set(data) - {"n", "arrows", "b", "name", "word"})
    if unknown:
        raise QuiverFileError(f"unknown key {unknown[0]!r}", f"$.{unknown[0]}", source)
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise QuiverFileError("name must be a string", "$.name", source)
    if "b" in data:
        if "arrows" in data or "n" in data:
            raise QuiverFileError("give either b or n/arrows, not both", "$", source)
        rows = data["b"]
        if not isinstance(rows, list) or not rows:
            raise QuiverFileError("b must be a non-empty list of rows", "$.b", source)
        n = len(rows)
        mat = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != n:
                raise QuiverFileError(f"row must be a list of length {n}", f"$.b[{i}]", source)
            mat.append([_int(x, f"$.b[{i}][{j}]", source) for j, x in enumerate(row)])
        for i in range(n):
            for j in range(n):
                if mat[i][j] != -mat[j][i]:
                    raise QuiverFileError(f"not skew-symmetric: b[{i}][{j}] = {mat[i][j]} but "
                                          f"b[{j}][{i}] = {mat[j][i]}", f"$.b[{i}][{j}]", source)
        b = np.array(mat, dtype=np.int64)
    else:
        if "n" not in data:
            raise QuiverFileError("missing key 'n' (or give 'b')", "$", source)
        n = _int(data["n"], "$.n", source)
        if n < 1:
            raise QuiverFileError("n must be positive", "$.n", source)
        arrows = data.get("arrows", [])
        if not isinstance(arrows, list):
            raise QuiverFileError("arrows must be a list", "$.arrows", source)
        parsed = []
        for a, arrow in enumerate(arrows):
            if not isinstance(arrow, list) or len(arrow) != 2:
                raise QuiverFileError("an arrow is a pair [source, target]", f"$.arrows[{a}]", source)
            ends = []
            for e, v in enumerate(arrow):
                v = _int(v, f"$.arrows[{a}][{e}]", source)
                if not 1 <= v <= n:
                    raise QuiverFileError(f"vertex {v} out of range 1..{n}", f"$.arrows[{a}][{e}]", source)
                ends.append(v - 1)
            if ends[0] == ends[1]:
                raise QuiverFileError("loops are not allowed", f"$.arrows[{a}]", source)
            parsed.append(tuple(ends))
        b = arrows_to_b(n, parsed)
    word = data.get("word", [])
    if not isinstance(word, list):
        raise QuiverFileError("word must be a list of 1-based vertices", "$.word", source)
    w = []
    for p, k in enumerate(word):
        k = _int(k, f"$.word[{p}]", source)
        if not 1 <= k <= b.shape[0]:
            raise QuiverFileError(f"mutation index {k} out of range 1..{b.shape[0]}", f"$.word[{p}]", source)
        w.append(k - 1)
    return QuiverFile(b, name, tuple(w))


def loads(text: str, source: str = "<input>") -> QuiverFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuiverFileError(exc.msg, f"line {exc.lineno}, column {exc.colno}", source) from None
    return parse_quiver(data, source)


def load(path: str) -> QuiverFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise QuiverFileError(exc.strerror or str(exc), "file", path) from None
    return loads(text, path)


def parse_word(text: str, n: int) -> tuple[int, ...]:
    """``"1,3,2"`` -> ``(0, 2, 1)``, checked against the rank."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for p, part in enumerate(text.split(",")):
        try:
            k = int(part)
        except ValueError:
            raise QuiverFileError(f"not an integer: {part!r}", f"word[{p}]", "--word") from None
        if not 1 <= k <= n:
            raise QuiverFileError(f"mutation index {k} out of range 1..{n}", f"word[{p}]", "--word")
        out.append(k - 1)
    return tuple(out)
