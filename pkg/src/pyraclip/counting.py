"""Instrumented scalar for exact operation counting.

The clipper kernels are generic over their scalar type: running them on
:class:`CountedFloat` inputs counts every comparison, addition or
subtraction, multiplication, and division performed on values derived
from the inputs, while the timed build keeps running on plain floats
with zero instrumentation.  Sign flips (unary negation) are not
counted: the symmetry reductions inside the pyramidal clipper are pure
variable renamings in a fully expanded case table, and counting their
negations would charge the clipper for bookkeeping no expanded build
would perform.

Counting runs are single-threaded; the active counter is module state.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass
class OpCounts:
    comparisons: int = 0
    additions: int = 0
    multiplications: int = 0
    divisions: int = 0

    def __add__(self, other: "OpCounts") -> "OpCounts":
        return OpCounts(
            self.comparisons + other.comparisons,
            self.additions + other.additions,
            self.multiplications + other.multiplications,
            self.divisions + other.divisions,
        )

    def as_dict(self) -> dict[str, int]:
        return {
            "comparisons": self.comparisons,
            "additions": self.additions,
            "multiplications": self.multiplications,
            "divisions": self.divisions,
        }


class _Counter:
    __slots__ = ("cmp", "add", "mul", "div")

    def __init__(self) -> None:
        self.cmp = 0
        self.add = 0
        self.mul = 0
        self.div = 0

    def reset(self) -> None:
        self.cmp = 0
        self.add = 0
        self.mul = 0
        self.div = 0

    def snapshot(self) -> OpCounts:
        return OpCounts(self.cmp, self.add, self.mul, self.div)


_COUNTER = _Counter()


def _value(other):
    return other.v if type(other) is CountedFloat else other


class CountedFloat:
    """Float wrapper whose arithmetic increments the active counter."""

    __slots__ = ("v",)

    def __init__(self, v: float) -> None:
        self.v = v

    def __repr__(self) -> str:
        return f"CountedFloat({self.v!r})"

    def __float__(self) -> float:
        return self.v

    def __neg__(self) -> "CountedFloat":
        return CountedFloat(-self.v)

    def __abs__(self) -> "CountedFloat":
        return CountedFloat(abs(self.v))

    def __add__(self, other):
        _COUNTER.add += 1
        return CountedFloat(self.v + _value(other))

    __radd__ = __add__

    def __sub__(self, other):
        _COUNTER.add += 1
        return CountedFloat(self.v - _value(other))

    def __rsub__(self, other):
        _COUNTER.add += 1
        return CountedFloat(_value(other) - self.v)

    def __mul__(self, other):
        _COUNTER.mul += 1
        return CountedFloat(self.v * _value(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        _COUNTER.div += 1
        return CountedFloat(self.v / _value(other))

    def __rtruediv__(self, other):
        _COUNTER.div += 1
        return CountedFloat(_value(other) / self.v)

    def __lt__(self, other):
        _COUNTER.cmp += 1
        return self.v < _value(other)

    def __le__(self, other):
        _COUNTER.cmp += 1
        return self.v <= _value(other)

    def __gt__(self, other):
        _COUNTER.cmp += 1
        return self.v > _value(other)

    def __ge__(self, other):
        _COUNTER.cmp += 1
        return self.v >= _value(other)

    def __eq__(self, other):
        _COUNTER.cmp += 1
        return self.v == _value(other)

    def __ne__(self, other):
        _COUNTER.cmp += 1
        return self.v != _value(other)

    __hash__ = None  # mutable-counter semantics; not hashable


def unwrap(value):
    """Plain float of a kernel output element (CountedFloat or float)."""
    return value.v if type(value) is CountedFloat else value


def count_call(kernel, xa, ya, za, xb, yb, zb) -> tuple[OpCounts, object]:
    """Run one kernel call on wrapped inputs; return (counts, raw result).

    The raw result tuple may mix CountedFloat and plain float elements;
    use :func:`unwrap` on them.
    """
    _COUNTER.reset()
    result = kernel(
        CountedFloat(xa),
        CountedFloat(ya),
        CountedFloat(za),
        CountedFloat(xb),
        CountedFloat(yb),
        CountedFloat(zb),
    )
    return _COUNTER.snapshot(), result
