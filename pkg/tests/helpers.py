"""Brute-force references and strategies shared by the test modules."""

import random

from hypothesis import strategies as st

from alt_width.perm import Permutation


def from_images(images, start=1):
    """Permutation sending start+i to images[i]."""
    return Permutation({start + i: y for i, y in enumerate(images)})


def apply_word(factors, x):
    """Image of x under f1 f2 ... fn with fn applied first (brute force)."""
    for f in reversed(factors):
        x = f(x)
    return x


def word_product(factors):
    """Independent reference for products: evaluate point by point."""
    pts = set()
    for f in factors:
        pts.update(f.support)
    return Permutation({x: apply_word(factors, x) for x in pts})


def random_perm(rng: random.Random, points):
    pts = list(points)
    img = pts[:]
    rng.shuffle(img)
    return Permutation(dict(zip(pts, img)))


@st.composite
def perms(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    images = draw(st.permutations(range(1, n + 1)))
    return from_images(images)


@st.composite
def sparse_perms(draw, max_moved=8, max_point=200):
    pts = draw(st.lists(st.integers(1, max_point), min_size=0, max_size=max_moved, unique=True))
    img = draw(st.permutations(pts))
    return Permutation(dict(zip(pts, img)))
