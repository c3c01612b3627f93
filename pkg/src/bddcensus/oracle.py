"""Brute-force ground truth: ROBDDs built from raw truth tables.

For small k every Boolean function can be enumerated (there are 2**2**k
of them) and its ROBDD constructed directly, giving size and profile
histograms that are independent of the polynomial engine.  Construction
is bottom-up Shannon expansion with a unique table, so the two reduction
rules hold by construction: a node is never created with equal children
(deletion rule) and never duplicated (merge rule).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

TERM_ZERO = 0
TERM_ONE = 1

CENSUS_MAX_K = 4


class TruthTable:
    """Truth table of a Boolean function in k variables.

    ``bits[i]`` is the value on the assignment whose binary encoding is i
    with x_1 as the most significant bit.
    """

    __slots__ = ("k", "bits")

    def __init__(self, k, bits):
        bits = tuple(int(b) for b in bits)
        if k < 0:
            raise ValueError("k must be non-negative")
        if len(bits) != 1 << k:
            raise ValueError(f"expected {1 << k} bits, got {len(bits)}")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("truth table entries must be 0 or 1")
        self.k = k
        self.bits = bits

    @classmethod
    def from_mask(cls, k, mask):
        """Build from an integer whose bit i is the value on assignment i."""
        return cls(k, [(mask >> i) & 1 for i in range(1 << k)])

    @property
    def mask(self):
        m = 0
        for i, b in enumerate(self.bits):
            m |= b << i
        return m

    def __eq__(self, other):
        if isinstance(other, TruthTable):
            return self.k == other.k and self.bits == other.bits
        return NotImplemented

    def __hash__(self):
        return hash((self.k, self.bits))

    def __repr__(self):
        return f"TruthTable(k={self.k}, bits={self.bits})"


class Robdd:
    """A reduced ordered BDD.

    Node ids: 0 is the 0-sink, 1 is the 1-sink, decision node i is id
    i + 2 with ``nodes[i] = (var, low, high)``.  Variables are numbered
    1..k and strictly increase along every path.
    """

    __slots__ = ("k", "root", "nodes")

    def __init__(self, k, root, nodes):
        self.k = k
        self.root = root
        self.nodes = tuple(nodes)

    @property
    def size(self):
        """Number of decision nodes (sinks excluded)."""
        return len(self.nodes)

    @property
    def profile(self):
        """Nodes per variable, as a length-k tuple."""
        counts = Counter(var for var, _, _ in self.nodes)
        return tuple(counts.get(i, 0) for i in range(1, self.k + 1))

    def evaluate(self, assignment):
        """Value on one assignment (sequence of k bits, x_1 first)."""
        if len(assignment) != self.k:
            raise ValueError(f"expected {self.k} bits, got {len(assignment)}")
        node = self.root
        while node >= 2:
            var, low, high = self.nodes[node - 2]
            node = high if assignment[var - 1] else low
        return node

    def truth_table(self):
        """Re-evaluate on all assignments."""
        bits = []
        for idx in range(1 << self.k):
            assignment = [(idx >> (self.k - 1 - i)) & 1 for i in range(self.k)]
            bits.append(self.evaluate(assignment))
        return TruthTable(self.k, bits)

    def __eq__(self, other):
        if isinstance(other, Robdd):
            return (
                self.k == other.k
                and self.root == other.root
                and self.nodes == other.nodes
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.k, self.root, self.nodes))

    def __repr__(self):
        return f"Robdd(k={self.k}, size={self.size}, profile={self.profile})"


def _builder(k):
    """Shared-state recursive constructor over (level, sub-table mask)."""
    unique = {}
    nodes = []
    memo = {}

    def rec(i, mask):
        # mask encodes the table of a function on x_i .. x_k; the value on
        # assignment a is bit a of mask, with x_i the most significant bit.
        if i > k:
            return TERM_ONE if mask else TERM_ZERO
        key = (i, mask)
        found = memo.get(key)
        if found is not None:
            return found
        half_bits = 1 << (k - i)
        low = rec(i + 1, mask & ((1 << half_bits) - 1))
        high = rec(i + 1, mask >> half_bits)
        if low == high:
            result = low
        else:
            nkey = (i, low, high)
            result = unique.get(nkey)
            if result is None:
                nodes.append(nkey)
                result = len(nodes) + 1
                unique[nkey] = result
        memo[key] = result
        return result

    return rec, nodes


def build_robdd(table):
    """The unique ROBDD of one truth table, in variable order x_1 < .. < x_k."""
    rec, nodes = _builder(table.k)
    root = rec(1, table.mask)
    return Robdd(table.k, root, nodes)


@dataclass(frozen=True)
class Census:
    """Exact histograms over all Boolean functions in k variables."""

    k: int
    by_size: dict
    by_profile: dict


def census(k):
    """Enumerate all 2**2**k functions and histogram ROBDD sizes and profiles.

    Refused for k > 4: the function count is doubly exponential.
    """
    if not 1 <= k <= CENSUS_MAX_K:
        raise ValueError(f"census supports 1 <= k <= {CENSUS_MAX_K}, got {k}")
    rec, nodes = _builder(k)
    by_size = Counter()
    by_profile = Counter()
    for mask in range(1 << (1 << k)):
        root = rec(1, mask)
        # Gather the sub-DAG reachable from this root in the shared store.
        seen = set()
        stack = [root]
        while stack:
            node = stack.pop()
            if node < 2 or node in seen:
                continue
            seen.add(node)
            _, low, high = nodes[node - 2]
            stack.append(low)
            stack.append(high)
        counts = Counter(nodes[node - 2][0] for node in seen)
        profile = tuple(counts.get(i, 0) for i in range(1, k + 1))
        by_size[sum(profile)] += 1
        by_profile[profile] += 1
    return Census(k=k, by_size=dict(by_size), by_profile=dict(by_profile))
