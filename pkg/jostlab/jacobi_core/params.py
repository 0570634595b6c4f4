import logging
from collections import namedtuple

import numpy as np

from jostlab.exceptions import HorizonExceeded

logger = logging.getLogger(__name__)


class FreeTail(object):
    """a_n = 1, b_n = 0 beyond the head."""

    __slots__ = ()

    def __eq__(self, other):
        return isinstance(other, FreeTail)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash("FreeTail")

    def __repr__(self):
        return "FreeTail()"


FREE_TAIL = FreeTail()


class GeneratorTail(
    namedtuple("GeneratorTail", ["rule", "horizon", "offset", "description"])
):
    """Closed form tail. `rule` maps an integer array of absolute indices
    n >= 1 to the pair of arrays (a_n, b_n). `horizon` is the largest
    absolute index the rule may be evaluated at. `offset` counts the rows
    removed by stripping."""

    __slots__ = ()

    def __new__(cls, rule, horizon, offset=0, description=""):
        if horizon < 1:
            raise ValueError("Generator horizon must be positive")
        return super(GeneratorTail, cls).__new__(
            cls, rule, int(horizon), int(offset), description
        )

    def evaluate(self, indices):
        indices = np.asarray(indices, dtype=np.int64)
        absolute = indices + self.offset
        if absolute.size and absolute.max() > self.horizon:
            raise HorizonExceeded(
                "Requested index {} beyond the generator horizon {} ({})".format(
                    absolute.max(), self.horizon, self.description or "generator"
                )
            )
        a, b = self.rule(absolute)
        a = np.broadcast_to(np.asarray(a, dtype=float), absolute.shape)
        b = np.broadcast_to(np.asarray(b, dtype=float), absolute.shape)
        return a, b


class JacobiParams(namedtuple("JacobiParams", ["a_head", "b_head", "tail"])):
    """Jacobi parameters {a_n, b_n}, n >= 1, given by a finite head and a
    tail descriptor. Heads of different length are padded with free
    values. For a free tail trailing free entries are dropped, so equal
    matrices compare equal."""

    __slots__ = ()

    def __new__(cls, a_head=(), b_head=(), tail=FREE_TAIL):
        a_head = [float(value) for value in a_head]
        b_head = [float(value) for value in b_head]
        length = max(len(a_head), len(b_head))
        a_head += [1.0] * (length - len(a_head))
        b_head += [0.0] * (length - len(b_head))

        if any(not value > 0 for value in a_head):
            raise ValueError("Off-diagonal entries a_n must be positive")
        if not np.all(np.isfinite(a_head + b_head)):
            raise ValueError("Jacobi parameters must be finite")

        if isinstance(tail, FreeTail):
            while a_head and a_head[-1] == 1.0 and b_head[-1] == 0.0:
                a_head.pop()
                b_head.pop()
        elif not isinstance(tail, GeneratorTail):
            raise TypeError("Unknown tail descriptor: {!r}".format(tail))

        return super(JacobiParams, cls).__new__(
            cls, tuple(a_head), tuple(b_head), tail
        )

    @property
    def head_length(self):
        return len(self.a_head)

    @property
    def is_free_tail(self):
        return isinstance(self.tail, FreeTail)

    @property
    def max_index(self):
        """Largest index that can be evaluated, None if unbounded."""
        if self.is_free_tail:
            return None
        return max(self.head_length, self.tail.horizon - self.tail.offset)

    def coefficients(self, n):
        """Return (a_1..a_n, b_1..b_n) as float arrays of length n.

        :raises HorizonExceeded: if a generator tail is asked beyond its horizon.
        """
        n = int(n)
        if n < 0:
            raise ValueError("n must be nonnegative, got {}".format(n))
        head = min(n, self.head_length)
        a = np.ones(n)
        b = np.zeros(n)
        a[:head] = self.a_head[:head]
        b[:head] = self.b_head[:head]
        if n > head and not self.is_free_tail:
            tail_a, tail_b = self.tail.evaluate(np.arange(head + 1, n + 1))
            if np.any(tail_a <= 0):
                raise ValueError("Generator produced a nonpositive a_n")
            a[head:] = tail_a
            b[head:] = tail_b
        return a, b

    def entry(self, n):
        """(a_n, b_n) for a single index n >= 1."""
        if n < 1:
            raise ValueError("Jacobi indices start at 1")
        if n <= self.head_length:
            return self.a_head[n - 1], self.b_head[n - 1]
        if self.is_free_tail:
            return 1.0, 0.0
        a, b = self.tail.evaluate(np.array([n]))
        return float(a[0]), float(b[0])

    def __repr__(self):
        return "JacobiParams(a_head={}, b_head={}, tail={!r})".format(
            list(self.a_head), list(self.b_head), self.tail
        )


def strip(params, n):
    """Remove the first n rows and columns: a'_k = a_{k+n}, b'_k = b_{k+n}."""
    n = int(n)
    if n < 0:
        raise ValueError("Can only strip a nonnegative number of rows")
    tail = params.tail
    if not params.is_free_tail:
        tail = tail._replace(offset=tail.offset + n)
    return JacobiParams(params.a_head[n:], params.b_head[n:], tail)


def truncate_gc(params, n):
    """Keep a_j, b_j for j <= n and continue freely."""
    n = int(n)
    if n < 0:
        raise ValueError("Truncation index must be nonnegative")
    a, b = params.coefficients(n)
    return JacobiParams(a, b, FREE_TAIL)
