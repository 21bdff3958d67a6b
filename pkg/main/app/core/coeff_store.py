#!/usr/bin/env python3
"""
Shared coefficient store for the expansion generators
Memoizes exact coefficient sequences so every generator and every table
cell reuses the same Bernoulli numbers, Laplace coefficients and pairs
"""

import logging
import threading
from typing import Any, Callable, Dict, List, Sequence, Tuple

logger = logging.getLogger(__name__)


class CoefficientStore:
    """Process-wide memo of named coefficient sequences.

    Sequences only ever grow. Readers receive tuples, so nothing handed out
    can be mutated behind the store's back.
    """

    def __init__(self):
        # Re-entrant: building one sequence may pull terms of another
        # (Laplace coefficients need Bernoulli numbers).
        self._lock = threading.RLock()
        self._sequences: Dict[str, List[Any]] = {}

    def term(self, name: str, n: int, next_term: Callable[[Sequence[Any]], Any]) -> Any:
        """Return term n, extending the sequence one term at a time"""
        return self.prefix(name, n + 1, next_term)[n]

    def prefix(self, name: str, length: int,
               next_term: Callable[[Sequence[Any]], Any]) -> Tuple[Any, ...]:
        """Return the first `length` terms; next_term sees the terms known so far"""
        with self._lock:
            seq = self._sequences.setdefault(name, [])
            while len(seq) < length:
                seq.append(next_term(seq))
            return tuple(seq[:length])

    def cached_prefix(self, name: str, length: int,
                      build: Callable[[int], Sequence[Any]]) -> Tuple[Any, ...]:
        """Return the first `length` terms of a sequence built in bulk.

        `build(length)` must return at least `length` terms; it is only called
        when the cached prefix is too short.
        """
        with self._lock:
            seq = self._sequences.get(name, [])
            if len(seq) < length:
                built = list(build(length))
                if len(built) < length:
                    raise ValueError(f"builder for '{name}' returned {len(built)} of {length} terms")
                logger.debug("extended '%s' from %d to %d terms", name, len(seq), len(built))
                self._sequences[name] = built
                seq = built
            return tuple(seq[:length])

    def sizes(self) -> Dict[str, int]:
        """Number of cached terms per sequence"""
        with self._lock:
            return {name: len(seq) for name, seq in self._sequences.items()}

    def clear(self, name: str = None):
        """Drop one cached sequence, or all of them"""
        with self._lock:
            if name is None:
                self._sequences.clear()
            else:
                self._sequences.pop(name, None)


# Global instance for use throughout the package
coeff_store = CoefficientStore()


def get_coeff_store() -> CoefficientStore:
    """Get the global coefficient store instance"""
    return coeff_store
