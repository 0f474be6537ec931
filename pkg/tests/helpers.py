"""Shared table generators for the test suite."""

from __future__ import annotations

import numpy as np

from prbox import BoxTable, all_deterministic_boxes, convex_mix


def random_box(rng: np.random.Generator, label: str = "random") -> BoxTable:
    """A random valid table: nonnegative entries, normalized per setting pair."""
    arr = rng.random((2, 2, 2, 2))
    arr /= arr.sum(axis=(2, 3), keepdims=True)
    return BoxTable(arr, label)


def random_product_box(rng: np.random.Generator) -> BoxTable:
    """A random factorizable table p = q_a(a|x) * q_b(b|y)."""
    qa = rng.random((2, 2))
    qa /= qa.sum(axis=1, keepdims=True)
    qb = rng.random((2, 2))
    qb /= qb.sum(axis=1, keepdims=True)
    p = np.einsum("xa,yb->xyab", qa, qb)
    return BoxTable(p, "product")


def random_local_mixture(rng: np.random.Generator) -> BoxTable:
    """A random convex mixture of the 16 deterministic local strategies."""
    w = rng.random(16)
    w /= w.sum()
    return convex_mix(all_deterministic_boxes(), w, label="local-mixture")
