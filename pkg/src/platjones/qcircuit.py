"""Qubit-register simulation of the braid-word quantum algorithm.

Register layout: the independent block labels p_0..p_{m-1}, r_1..r_{m-3}
(2m-3 slots for m >= 2; one slot for the degenerate m = 1) each occupy
ceil(log2(k+1)) qubits holding the twice-value in binary.

Odd letters compile to one diagonal-phase gate.  An even letter at position
2a compiles to a (2m-3)-long chain of controlled q-6j gates that rotates the
register into a crossed-pairing tree exposing the channel q_a, one diagonal
phase, and the inverse chain: 2(2m-3)+1 gates.  Controlled q-6j tables are
indexed by the unchanged labels; control values or target values outside
the admissible set act as identity (a unitary completion that is
unobservable on encoded block states).

Sampling follows the Hadamard-test reduction: the ancilla measurement is an
exact Bernoulli variable with success probability (1 +/- Re or Im of the
vacuum matrix element)/2, so trials are drawn directly from the exactly
computed amplitude with a seeded PCG64 generator.  A full register+ancilla
statevector path cross-checks the reduction at small m.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .blocks import BlockBasis, BlockLabel, enumerate_basis, require_nonempty, vacuum_label
from .braid import ColoredBraidWord
from .errors import (DimensionMismatch, DomainError, RangeError, ResourceError, WidthError)
from .invariant import plat_expectation
from .braidrep import EigenvalueSpec, braiding_eigenvalue
from .qalgebra import RootOfUnity, Spin, _duality6j_raw, admissible, spin_range


@dataclass(frozen=True)
class QubitRegister:
    """Slot layout for the (p; r) labels of a 2m-strand plat at level k."""

    m: int
    k: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise RangeError(f"need m >= 1, got {self.m}")

    @property
    def slot_width(self) -> int:
        return max(1, math.ceil(math.log2(self.k + 1)))

    @property
    def n_slots(self) -> int:
        # 2m-3 independent labels for m >= 2 (p_1 = p_0 at m = 2);
        # the degenerate two-puncture register keeps one trivial slot.
        return max(1, 2 * self.m - 3)

    @property
    def n_qubits(self) -> int:
        return self.n_slots * self.slot_width

    def slot_of_p(self, i: int) -> int:
        if not 0 <= i <= self.m - 1:
            raise RangeError(f"p_{i} out of range")
        if self.m == 2 and i == 1:
            return 0  # p_1 = p_0
        return i

    def slot_of_r(self, j: int) -> int:
        """Slot holding r_j (r_0 and r_{m-2} live in the p slots)."""
        if j == 0:
            return self.slot_of_p(0)
        if j == self.m - 2:
            return self.slot_of_p(self.m - 1)
        if not 1 <= j <= self.m - 3:
            raise RangeError(f"r_{j} out of range")
        return self.m + j - 1

    def slot_values(self, label: BlockLabel) -> tuple[int, ...]:
        if self.m == 1:
            return (label.p[0],)
        if self.m == 2:
            return (label.p[0],)
        return tuple(label.p) + tuple(label.r[1:self.m - 2])

    def label_from_slots(self, values: tuple[int, ...]) -> BlockLabel:
        if self.m == 1:
            return BlockLabel((values[0],), ())
        if self.m == 2:
            return BlockLabel((values[0], values[0]), (values[0],))
        p = tuple(values[:self.m])
        r = (p[0],) + tuple(values[self.m:]) + (p[-1],)
        return BlockLabel(p, r)


def encode_register(label: BlockLabel, reg: QubitRegister) -> str:
    """Big-endian bitstring of the slot twice-values in slot order."""
    w = reg.slot_width
    bits = []
    for v in reg.slot_values(label):
        if v >= (1 << w):
            raise WidthError(f"twice-value {v} does not fit in {w} bits")
        bits.append(format(v, f"0{w}b"))
    return "".join(bits)


def decode_register(bits: str, reg: QubitRegister) -> BlockLabel:
    w = reg.slot_width
    if len(bits) != reg.n_qubits:
        raise WidthError(f"expected {reg.n_qubits} bits, got {len(bits)}")
    values = tuple(int(bits[i * w:(i + 1) * w], 2) for i in range(reg.n_slots))
    return reg.label_from_slots(values)


def _basis_state_index(label: BlockLabel, reg: QubitRegister) -> int:
    idx = 0
    base = 1 << reg.slot_width
    for v in reg.slot_values(label):
        idx = idx * base + v
    return idx


@dataclass(frozen=True)
class DiagPhase:
    """Diagonal phase on one slot; values absent from the table act as 1."""

    slot: int
    table: dict = field(compare=False)

    def inverse(self) -> "DiagPhase":
        return DiagPhase(self.slot, {v: p.conjugate() for v, p in self.table.items()})


@dataclass(frozen=True)
class ControlledQ6J:
    """Unitary on the target slot selected by control-slot values.

    ``tables`` maps control twice-value tuples to dense (2^w x 2^w) real
    orthogonal matrices; absent combinations act as identity.
    """

    target: int
    controls: tuple[int, ...]
    tables: dict = field(compare=False)

    def inverse(self) -> "ControlledQ6J":
        return ControlledQ6J(self.target, self.controls,
                             {c: m.T.copy() for c, m in self.tables.items()})


Gate = DiagPhase | ControlledQ6J


@dataclass(frozen=True)
class GateList:
    register: QubitRegister
    gates: tuple[Gate, ...]

    def __len__(self) -> int:
        return len(self.gates)


def _completed_unitary(D: np.ndarray, old_vals: list[int], new_vals: list[int], dim: int) -> np.ndarray:
    """Embed the admissible block into a dim x dim unitary; leftover basis
    states are paired off in sorted order with unit entries."""
    U = np.zeros((dim, dim))
    for ci, ov in enumerate(old_vals):
        for ri, nv in enumerate(new_vals):
            U[nv, ov] = D[ri, ci]
    left_old = [v for v in range(dim) if v not in old_vals]
    left_new = [v for v in range(dim) if v not in new_vals]
    for ov, nv in zip(left_old, left_new):
        U[nv, ov] = 1.0
    return U


def _chain_gates(colors, reg: QubitRegister, root: RootOfUnity) -> list[ControlledQ6J]:
    """The (2m-3) controlled q-6j gates rotating the odd register into the
    crossed-pairing tree (p_i -> t_i for interior i, then r_l -> q_{l+1})."""
    k = root.k
    m = reg.m
    tw = colors.twices()
    dim = 1 << reg.slot_width
    gates: list[ControlledQ6J] = []

    def block(four, old_is_l: bool):
        """Unitary table for one move, given the four fixed outer spins.

        The l-channel couples (a,b)&(c,d), the m-channel (b,c)&(a,d);
        ``old_is_l`` says which channel the register currently holds.
        """
        a, b, c, d = four
        lvals = [v for v in spin_range(root) if admissible(a, b, v, root) and admissible(c, d, v, root)]
        mvals = [v for v in spin_range(root) if admissible(b, c, v, root) and admissible(a, d, v, root)]
        if not lvals and not mvals:
            return None
        old_vals, new_vals = (lvals, mvals) if old_is_l else (mvals, lvals)
        D = np.zeros((len(new_vals), len(old_vals)))
        for ci, ov in enumerate(old_vals):
            for ri, nv in enumerate(new_vals):
                lv, mv = (ov, nv) if old_is_l else (nv, ov)
                D[ri, ci] = _duality6j_raw(a, b, c, d, lv, mv, k)
        return _completed_unitary(D, old_vals, new_vals, dim)

    # F1 moves: p_i -> t_i controlled on (r_{i-1}, r_i); the old value p_i
    # sits in the m-channel, the new t_i in the l-channel.
    for i in range(1, m - 1):
        controls = (reg.slot_of_r(i - 1), reg.slot_of_r(i))
        tables = {}
        for rv_prev in spin_range(root):
            for rv_next in spin_range(root):
                U = block((rv_prev, tw[2 * i], tw[2 * i + 1], rv_next), old_is_l=False)
                if U is not None:
                    tables[(rv_prev, rv_next)] = U
        gates.append(ControlledQ6J(reg.slot_of_p(i), controls, tables))
    # F3 moves: r_l -> q_{l+1} controlled on (t_l, t_{l+1}); t_0, t_{m-1}
    # are the constant boundary colors.
    for l in range(0, m - 1):
        controls = []
        if 1 <= l <= m - 2:
            controls.append(reg.slot_of_p(l))
        if 1 <= l + 1 <= m - 2:
            controls.append(reg.slot_of_p(l + 1))
        controls = tuple(controls)
        tables = {}
        ranges = [spin_range(root) if 1 <= idx <= m - 2 else (tw[0] if idx == 0 else tw[-1],)
                  for idx in (l, l + 1)]
        for t_l in ranges[0]:
            for t_next in ranges[1]:
                U = block((t_l, tw[2 * l + 1], tw[2 * l + 2], t_next), old_is_l=True)
                if U is None:
                    continue
                key = tuple(v for idx, v in zip((l, l + 1), (t_l, t_next)) if 1 <= idx <= m - 2)
                tables[key] = U
        gates.append(ControlledQ6J(reg.slot_of_r(l), controls, tables))
    return gates


def _q_slot(reg: QubitRegister, a: int) -> int:
    """Register slot holding q_a after the chain."""
    if a == 1:
        return reg.slot_of_p(0)
    if a == reg.m - 1:
        return reg.slot_of_p(reg.m - 1)
    return reg.slot_of_r(a - 1)


def compile_word(word: ColoredBraidWord, root: RootOfUnity) -> GateList:
    """Compile a colored braid word into register gates.

    Odd letters produce one DiagPhase; even letters produce the chain /
    phase / inverse-chain sandwich of 2(2m-3)+1 gates.
    """
    colors = word.puncture_colors()
    colors.check_level(root)
    reg = QubitRegister(word.m, root.k)
    gates: list[Gate] = []
    current = colors
    for (l, s) in word.letters:
        cj, ci = current.colors[l - 1], current.colors[l]
        par = cj.orient == ci.orient
        swapped = current.swapped(l - 1)
        if l % 2:  # odd letter: diagonal in the (p; r) register
            a = (l - 1) // 2
            table = {}
            for t in spin_range(root):
                if admissible(cj.twice, ci.twice, t, root):
                    spec = EigenvalueSpec(Spin(t), Spin(cj.twice), Spin(ci.twice),
                                          parallel=par, over=(s > 0))
                    table[t] = braiding_eigenvalue(spec, root)
            gates.append(DiagPhase(reg.slot_of_p(a), table))
        else:
            a = l // 2
            chain_in = _chain_gates(current, reg, root)
            chain_out = _chain_gates(swapped, reg, root)
            table = {}
            for t in spin_range(root):
                if admissible(cj.twice, ci.twice, t, root):
                    spec = EigenvalueSpec(Spin(t), Spin(cj.twice), Spin(ci.twice),
                                          parallel=par, over=(s > 0))
                    table[t] = braiding_eigenvalue(spec, root)
            gates.extend(chain_in)
            gates.append(DiagPhase(_q_slot(reg, a), table))
            gates.extend(g.inverse() for g in reversed(chain_out))
        current = swapped
    return GateList(register=reg, gates=tuple(gates))


# ---------------------------------------------------------------------------
# statevector simulation


def simulate_statevector(gate_list: GateList, initial: np.ndarray) -> np.ndarray:
    """Apply the gates to a register statevector; norm is preserved."""
    reg = gate_list.register
    dim = 1 << reg.n_qubits
    if initial.shape != (dim,):
        raise DimensionMismatch(f"state must have length {dim}, got {initial.shape}")
    base = 1 << reg.slot_width
    state = initial.astype(complex).reshape([base] * reg.n_slots)
    for gate in gate_list.gates:
        if isinstance(gate, DiagPhase):
            phases = np.ones(base, dtype=complex)
            for v, p in gate.table.items():
                phases[v] = p
            shape = [1] * reg.n_slots
            shape[gate.slot] = base
            state = state * phases.reshape(shape)
        else:
            new = state.copy()
            tpos = gate.target
            for cvals, U in gate.tables.items():
                sl: list = [slice(None)] * reg.n_slots
                for cslot, cv in zip(gate.controls, cvals):
                    sl[cslot] = cv
                block = state[tuple(sl)]
                # target axis position after fixing the control axes
                tshift = sum(1 for c in gate.controls if c < tpos)
                moved = np.moveaxis(block, tpos - tshift, 0)
                moved = np.tensordot(U, moved, axes=(1, 0))
                new[tuple(sl)] = np.moveaxis(moved, 0, tpos - tshift)
            state = new
    return state.reshape(dim)


def basis_state(label: BlockLabel, reg: QubitRegister) -> np.ndarray:
    state = np.zeros(1 << reg.n_qubits, dtype=complex)
    state[_basis_state_index(label, reg)] = 1.0
    return state


def gates_as_block_matrix(gate_list: GateList, basis_in: BlockBasis, basis_out: BlockBasis) -> np.ndarray:
    """Matrix of the compiled circuit restricted to encoded block states."""
    reg = gate_list.register
    cols = []
    out_index = [_basis_state_index(lab, reg) for lab in basis_out.labels]
    for lab in basis_in.labels:
        final = simulate_statevector(gate_list, basis_state(lab, reg))
        cols.append(final[out_index])
    return np.array(cols).T


# ---------------------------------------------------------------------------
# Hadamard test


@dataclass(frozen=True)
class SamplePlan:
    """Chernoff-bounded sampling plan for the additive approximation."""

    delta: float
    variance_bound: float = 1.0
    confidence: float = 0.75
    shots: int | None = None
    seed: int = 0

    def resolved_shots(self) -> int:
        if self.shots is not None:
            if self.shots < 1:
                raise DomainError("shots must be positive")
            return self.shots
        return required_samples(self.delta, self.variance_bound, self.confidence)


def required_samples(delta: float, v: float = 1.0, confidence: float = 0.75) -> int:
    """Smallest N with 2 exp(-N delta^2 / (4 v)) <= 1 - confidence."""
    if delta <= 0 or v <= 0 or not 0 < confidence < 1:
        raise DomainError("need delta > 0, v > 0, 0 < confidence < 1")
    return max(1, math.ceil(4.0 * v / delta ** 2 * math.log(2.0 / (1.0 - confidence))))


def hadamard_test(word: ColoredBraidWord, root: RootOfUnity, component: str,
                  plan: SamplePlan) -> tuple[float, dict]:
    """Sampled estimate of Re or Im of the vacuum matrix element.

    The ancilla distribution is the exact Bernoulli of the Hadamard trick:
    p(+1) = (1 + x)/2 with x the requested component of <vac|K(b)|vac>.
    Identical plans reproduce identical counts.
    """
    if component not in ("re", "im"):
        raise DomainError(f"component must be 're' or 'im', got {component!r}")
    z = plat_expectation(word, root)
    x = z.real if component == "re" else z.imag
    n = plan.resolved_shots()
    p = min(1.0, max(0.0, 0.5 * (1.0 + x)))
    rng = np.random.default_rng(plan.seed)
    ups = int(np.count_nonzero(rng.random(n) < p))
    estimate = 2.0 * ups / n - 1.0
    counts = {"+1": ups, "-1": n - ups}
    return estimate, counts


def exact_bernoulli(word: ColoredBraidWord, root: RootOfUnity, component: str) -> float:
    """The exact ancilla success probability (1 + x)/2 the sampler draws from."""
    z = plat_expectation(word, root)
    x = z.real if component == "re" else z.imag
    return 0.5 * (1.0 + x)


def ancilla_probability_statevector(word: ColoredBraidWord, root: RootOfUnity,
                                    component: str) -> float:
    """p(ancilla = 0) from the full register+ancilla statevector circuit.

    Cross-check of the Bernoulli reduction for m <= 3: prepares
    (|0> + |1>)/sqrt(2) x |enc(vac)>, applies the compiled gates controlled
    on the ancilla, rotates (S^dagger for 'im'), applies H, and returns the
    exact |0> probability (1 + Re or Im <vac|U|vac>)/2.
    """
    if word.m > 3:
        raise ResourceError("statevector cross-check is limited to m <= 3")
    gate_list = compile_word(word, root)
    reg = gate_list.register
    basis = require_nonempty(enumerate_basis(word.puncture_colors(), root))
    vac = vacuum_label(basis)
    psi0 = basis_state(vac, reg) / math.sqrt(2.0)
    psi1 = simulate_statevector(gate_list, psi0.copy())
    if component == "im":
        psi1 = -1j * psi1
    elif component != "re":
        raise DomainError(f"component must be 're' or 'im', got {component!r}")
    branch0 = (psi0 + psi1) / math.sqrt(2.0)
    return float(np.vdot(branch0, branch0).real)
