"""Colored Jones polynomials of plat-closed braids at SU(2)_q roots of unity.

Exact evaluation through the conformal-block braid representation, a
simulated quantum algorithm (qubit register, controlled q-6j gates,
Hadamard-test sampling), Reshetikhin-Turaev 3-manifold invariants, and a
volume-conjecture asymptotic scan, validated against independent oracles.
"""

from .blocks import BlockBasis, BlockLabel, OrientedSpin, PunctureColors, enumerate_basis, vacuum_label
from .braid import ColoredBraidWord, components, linking_matrix, parse_word, signature, writhe
from .invariant import colored_jones, plat_expectation, rt_invariant, volume_ratio, volume_scan
from .braidrep import braiding_eigenvalue, even_generator, full_duality_matrix, odd_generator, represent_word
from .oracle import fig8_colored_jones, fig8_volume, jones_at, kauffman_bracket, tree_recoupling_oracle
from .qalgebra import QRacahArgs, RootOfUnity, Spin, admissible, casimir, duality6j, qfact, qint, qracah
from .qcircuit import QubitRegister, SamplePlan, compile_word, encode_register, hadamard_test, required_samples, simulate_statevector

__version__ = "0.1.0"

__all__ = [
    "RootOfUnity", "Spin", "QRacahArgs", "qint", "qfact", "casimir", "admissible",
    "qracah", "duality6j",
    "OrientedSpin", "PunctureColors", "BlockLabel", "BlockBasis", "enumerate_basis",
    "vacuum_label",
    "ColoredBraidWord", "parse_word", "writhe", "components", "linking_matrix", "signature",
    "braiding_eigenvalue", "odd_generator", "even_generator", "full_duality_matrix",
    "represent_word",
    "plat_expectation", "colored_jones", "rt_invariant", "volume_ratio", "volume_scan",
    "kauffman_bracket", "jones_at", "tree_recoupling_oracle", "fig8_colored_jones",
    "fig8_volume",
    "QubitRegister", "SamplePlan", "compile_word", "encode_register", "simulate_statevector",
    "hadamard_test", "required_samples",
    "__version__",
]
