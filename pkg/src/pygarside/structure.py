"""
Finite Garside structures given by their table of simple elements.

A StructureTable lists the simples (the left divisors of the Garside element
Δ) by index, the atoms among them, and every product s·t of two simples that
is again simple. Everything else is derived from those product cells: the
left and right divisibility orders, their lattice operations, the complement
∂ with s·∂(s) = Δ, the automorphism τ(s) = Δ⁻¹sΔ = ∂(∂(s)) and the norm ‖Δ‖.

Divisibility is stored as one bitmask per simple (bit a of down_left[b] is set
when a ≤_L b). In a lattice, the meet of a and b is the unique simple whose
down-set is down_left[a] & down_left[b], so meets and joins are dictionary
lookups on intersected masks and never need an N × N table.

validate_structure() checks the Garside monoid axioms by exhaustion. Kernel
operations only accept validated tables; a table becomes immutable once it
passes.
"""

import dataclasses
import logging

from .common import IDENTITY, MalformedStructureError


@dataclasses.dataclass
class ValidationReport:
    violations: list[str]
    # Remarks that don't make the table invalid
    notes: list[str] = dataclasses.field(default_factory=list)

    @property
    def passed(self):
        return not self.violations


def _bits(mask):
    """Yield the indices of the set bits of mask, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class StructureTable:
    def __init__(self, names, atoms, delta, product, label="custom"):
        """
        :param names: Display name of each simple, in index order. Index 0 is
                      the identity.
        :param atoms: Indices of the atoms
        :param delta: Index of Δ
        :param product: Mapping (s, t) -> s·t for every product of simples
                        that is simple. Products with the identity may be
                        omitted.
        :param label: Where the table came from, e.g. "braid:3"
        """
        self.names = tuple(names)
        self.atoms = tuple(atoms)
        self.delta = delta
        self.label = label
        self.validated = False
        self._check_well_formed(product)

        n = len(self.names)
        cells = dict(product)
        for s in range(n):
            cells.setdefault((IDENTITY, s), s)
            cells.setdefault((s, IDENTITY), s)
        self.product = cells
        self.index = {name: i for i, name in enumerate(self.names)}

        # Divisibility masks, and quotients: a·c = b gives
        # quotient_left[a, b] = c and quotient_right[c, b] = a
        self.down_left = [0] * n
        self.up_left = [0] * n
        self.down_right = [0] * n
        self.up_right = [0] * n
        self.quotient_left = {}
        self.quotient_right = {}
        # Products available to the right of each simple: x -> [(u, x·u)]
        self.right_products = [[] for _ in range(n)]
        self._cancellation = []
        for (a, c), b in sorted(cells.items()):
            self.down_left[b] |= 1 << a
            self.up_left[a] |= 1 << b
            self.down_right[b] |= 1 << c
            self.up_right[c] |= 1 << b
            self.right_products[a].append((c, b))
            if self.quotient_left.setdefault((a, b), c) != c:
                self._cancellation.append(
                    f"left cancellation fails: {self._pair(a, c)} = "
                    f"{self._pair(a, self.quotient_left[a, b])}"
                )
            if self.quotient_right.setdefault((c, b), a) != a:
                self._cancellation.append(
                    f"right cancellation fails: {self._pair(a, c)} = "
                    f"{self._pair(self.quotient_right[c, b], c)}"
                )

        self._by_down_left = self._index_masks(self.down_left)
        self._by_up_left = self._index_masks(self.up_left)
        self._by_down_right = self._index_masks(self.down_right)
        self._by_up_right = self._index_masks(self.up_right)

        # Filled in by validate_structure()
        self.complement = None
        self.tau_powers = None
        self.tau_order = None
        self.central_exponent = None
        self.garside_norm = None
        self.spelling = None

    def _check_well_formed(self, product):
        n = len(self.names)
        if n < 2:
            raise MalformedStructureError("A structure needs at least 1 and Δ")
        seen = set()
        for name in self.names:
            if not name or any(c.isspace() for c in name):
                raise MalformedStructureError(f"Invalid simple name {name!r}")
            if name in seen:
                raise MalformedStructureError(f"Duplicate simple name {name!r}")
            seen.add(name)
        if not 0 < self.delta < n:
            raise MalformedStructureError(f"Δ index {self.delta} is dangling")
        if "D" in seen and self.names[self.delta] != "D":
            raise MalformedStructureError('Only Δ may be named "D"')
        if not self.atoms:
            raise MalformedStructureError("A structure needs at least one atom")
        if len(set(self.atoms)) != len(self.atoms):
            raise MalformedStructureError("Atoms are listed twice")
        for a in self.atoms:
            if not 0 < a < n:
                raise MalformedStructureError(f"Atom index {a} is dangling")
        for (s, t), c in product.items():
            if not all(0 <= i < n for i in (s, t, c)):
                raise MalformedStructureError(
                    f"Product cell ({s}, {t}) -> {c} has a dangling index"
                )
            if (s == IDENTITY and c != t) or (t == IDENTITY and c != s):
                raise MalformedStructureError(
                    f"Product cell {self._pair(s, t)} = {self.names[c]} "
                    "contradicts the identity"
                )

    def _pair(self, s, t):
        return f"{self.names[s]}·{self.names[t]}"

    @staticmethod
    def _index_masks(masks):
        """
        Map each mask to the simple carrying it. Masks carried by more than
        one simple are mapped to None, which marks an antisymmetry failure.
        """
        by_mask = {}
        for s, mask in enumerate(masks):
            by_mask[mask] = None if mask in by_mask else s
        return by_mask

    @property
    def size(self):
        return len(self.names)

    def leq_left(self, a, b):
        return bool(self.down_left[b] >> a & 1)

    def leq_right(self, a, b):
        return bool(self.down_right[b] >> a & 1)

    def meet_left(self, a, b):
        """The ≤_L-greatest common left divisor a ∧_L b, or None."""
        return self._by_down_left.get(self.down_left[a] & self.down_left[b])

    def join_left(self, a, b):
        """The ≤_L-least common left multiple a ∨_L b among simples, or None."""
        return self._by_up_left.get(self.up_left[a] & self.up_left[b])

    def meet_right(self, a, b):
        return self._by_down_right.get(self.down_right[a] & self.down_right[b])

    def join_right(self, a, b):
        return self._by_up_right.get(self.up_right[a] & self.up_right[b])

    def left_complement(self, s):
        """∂(s), the simple with s·∂(s) = Δ."""
        return self.complement[s]

    def tau(self, s, k=1):
        """τ^k(s) = Δ^-k·s·Δ^k, for any integer k."""
        return self.tau_powers[k % self.tau_order][s]

    def is_atom(self, s):
        return s in self.atoms

    def require_validated(self):
        if not self.validated:
            raise ValueError(f"Structure {self.label} has not been validated")

    def _derive(self):
        """Compute ∂, τ, ‖Δ‖ and atom spellings of a table that passed."""
        n = self.size
        everything = range(n)
        self.complement = tuple(
            self.quotient_left[s, self.delta] for s in everything
        )
        tau = tuple(self.complement[self.complement[s]] for s in everything)
        powers = [tuple(everything)]
        while True:
            following = tuple(tau[s] for s in powers[-1])
            if following == powers[0]:
                break
            powers.append(following)
        self.tau_powers = tuple(powers)
        self.tau_order = len(powers)
        # Δ^m is central exactly when τ^m is the identity on simples
        self.central_exponent = self.tau_order

        # Longest atom chain: proper left divisors have fewer left divisors,
        # so sorting by that count is a topological order.
        chain = [0] * n
        for b in sorted(everything, key=lambda s: self.down_left[s].bit_count()):
            for a in self.atoms:
                c = self.quotient_right.get((a, b))
                if c is not None and c != b:
                    chain[b] = max(chain[b], chain[c] + 1)
        self.garside_norm = chain[self.delta]

        self.spelling = self._spell()
        self.validated = True
        logging.debug(
            f"Validated {self.label}: {n} simples, ‖Δ‖={self.garside_norm}, "
            f"tau_order={self.tau_order}"
        )

    def _spell(self):
        """
        Spell every simple as a product of atoms, breadth first from the
        identity, trying atoms in index order.
        :returns: A list of atom tuples, with None for unreachable simples.
        """
        spelling = [None] * self.size
        spelling[IDENTITY] = ()
        frontier = [IDENTITY]
        while frontier:
            following = []
            for s in frontier:
                for a in sorted(self.atoms):
                    t = self.product.get((s, a))
                    if t is not None and spelling[t] is None:
                        spelling[t] = spelling[s] + (a,)
                        following.append(t)
            frontier = following
        return spelling


def _lattice_violations(table, side, down, masks_by):
    """
    Check that ≤ is a partial order in which every two simples have a meet.
    With 1 below and Δ above everything, joins follow: a ∨ b is the meet of
    the common multiples of a and b.
    """
    violations = []
    for b in range(table.size):
        for a in _bits(down[b]):
            if down[a] & ~down[b]:
                violations.append(
                    f"≤_{side} is not transitive below {table.names[b]}"
                )
                break
    duplicates = sorted(
        {table.names[s] for s in range(table.size) if masks_by[down[s]] is None}
    )
    if duplicates:
        violations.append(
            f"≤_{side} is not antisymmetric on {', '.join(duplicates)}"
        )
    for a in range(table.size):
        below_a = down[a]
        for b in range(a + 1, table.size):
            if masks_by.get(below_a & down[b]) is None:
                violations.append(
                    f"{table.names[a]} and {table.names[b]} have no "
                    f"greatest common {side.lower()}-divisor among simples"
                )
    return violations


def _associativity_violations(table):
    violations = []
    for (s, t), st in table.product.items():
        for u, stu in table.right_products[st]:
            tu = table.product.get((t, u))
            if tu is None or table.product.get((s, tu)) != stu:
                violations.append(
                    f"product is not associative on "
                    f"({table.names[s]}, {table.names[t]}, {table.names[u]})"
                )
    return violations


def validate_structure(table):
    """
    Check the Garside monoid axioms on a table by exhaustion.

    :returns: A ValidationReport. If it passed, the table's derived data is
              filled in and the table is marked validated.
    """
    if table.validated:
        return ValidationReport([])
    n = table.size
    everything = (1 << n) - 1
    violations = list(table._cancellation)
    violations += _associativity_violations(table)
    violations += _lattice_violations(
        table, "L", table.down_left, table._by_down_left,
    )
    violations += _lattice_violations(
        table, "R", table.down_right, table._by_down_right,
    )

    if table.down_left[table.delta] != everything:
        missing = [table.names[s] for s in range(n) if not table.leq_left(s, table.delta)]
        violations.append(f"not left divisors of Δ: {', '.join(missing)}")
    if table.down_right[table.delta] != everything:
        missing = [table.names[s] for s in range(n) if not table.leq_right(s, table.delta)]
        violations.append(f"not right divisors of Δ: {', '.join(missing)}")

    for a in table.atoms:
        if table.down_left[a] != (1 << IDENTITY | 1 << a):
            violations.append(f"atom {table.names[a]} is a product of simples")
    unreachable = [table.names[s] for s, w in enumerate(table._spell()) if w is None]
    if unreachable:
        violations.append(f"atoms don't generate: {', '.join(unreachable)}")

    complement = [table.quotient_left.get((s, table.delta)) for s in range(n)]
    if None in complement or len(set(complement)) != n:
        violations.append("∂ is not a bijection on simples")
    elif complement[IDENTITY] != table.delta or complement[table.delta] != IDENTITY:
        violations.append("∂ does not exchange 1 and Δ")
    else:
        # Every u ≤_L ∂(s) must give a listed simple s·u
        for s in range(n):
            for u in _bits(table.down_left[complement[s]]):
                if (s, u) not in table.product:
                    violations.append(
                        f"product table is missing {table._pair(s, u)}"
                    )
        tau = [complement[complement[s]] for s in range(n)]
        if sorted(tau[a] for a in table.atoms) != sorted(table.atoms):
            violations.append("τ does not permute the atoms")
        if not violations:
            # A bijection carrying product cells to product cells is an
            # automorphism of both lattices
            for (s, t), c in table.product.items():
                if table.product.get((tau[s], tau[t])) != tau[c]:
                    violations.append(f"τ does not preserve {table._pair(s, t)}")

    report = ValidationReport(violations)
    if report.passed:
        table._derive()
        if not table.label.startswith(("braid:", "torus:", "free_abelian:")):
            report.notes.append(
                "summit computations on this table rely on the ‖Δ‖ cycling "
                "bound; cross-check them against the conjugation oracle"
            )
    else:
        logging.info(f"{table.label} failed validation: {violations[0]}")
    return report
