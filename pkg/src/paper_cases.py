"""Every concrete state and value of the generalized-monogamy worked examples.

Quantity keys (evaluated by harness.cmd_reproduce_paper, 0-based qubits, A=0, B=1, C1=2, ...):
  C[p,q] / Ca[p,q]        Wootters concurrence / concurrence of assistance of rho_pq
  C[..|rest]              pure-state concurrence across the listed qubits | the others
  T[..]                   linear entropy of the marginal on the listed qubits
  <bound name>            value of the named monogamy bound, e.g. theorem1_lower
  <bound name>[i,j]       W-class bound for the pair (i, j)
"""

import math

from models import ExpectedValue, PaperCase

SQRT15 = math.sqrt(15)

# lengths quoted with the vector example: a = b = (2 sqrt(2)/3)^2, c = (2/3)^2
PAPER_TRIANGLE_LENGTHS = (8 / 9, 8 / 9, 4 / 9)

SATURATING_4Q = PaperCase(
    case_id="saturating-4q",
    n_qubits=4,
    basis_terms=[("0000", 1), ("1001", 1)],
    expected=[
        ExpectedValue(quantity="C[0,1|rest]", expected=1.0, provenance="C(|psi>_AB|CD) >= 1 after the four-qubit example: saturation"),
        ExpectedValue(quantity="T[1,2,3]", expected=0.5, provenance="rho_BCD = (|000><000| + |001><001|)/2"),
        ExpectedValue(quantity="T[0,2,3]", expected=0.0, provenance="rho_ACD = (|000>+|101>)(<000|+<101|)/2 is pure"),
        ExpectedValue(quantity="C[0,2]", expected=0.0, provenance="C(rho_AC) = 0"),
        ExpectedValue(quantity="C[0,3]", expected=1.0, provenance="C(rho_AD) = 1"),
        ExpectedValue(quantity="Ca[1,2]", expected=0.0, provenance="C_a(rho_BC) = 0"),
        ExpectedValue(quantity="Ca[1,3]", expected=0.0, provenance="C_a(rho_BD) = 0"),
        ExpectedValue(quantity="Ca[0,1]", expected=0.0, provenance="C_a(rho_AB) = 0, upper-bound example"),
        ExpectedValue(quantity="Ca[0,2]", expected=0.0, provenance="C_a(rho_AC) = 0, upper-bound example"),
        ExpectedValue(quantity="Ca[0,3]", expected=1.0, provenance="C_a(rho_AD) = 1, upper-bound example"),
        ExpectedValue(quantity="theorem1_lower", expected=1.0, provenance="the state saturates the lower bound"),
        ExpectedValue(quantity="theorem2_upper", expected=1.0, provenance="the state also saturates the upper bound"),
        ExpectedValue(quantity="theorem1_slack", expected=0.0, provenance="saturation of the lower bound"),
        ExpectedValue(quantity="theorem2_slack", expected=0.0, provenance="saturation of the upper bound"),
    ],
)

# The worked example states C_A|BCD = C_B|ACD = 2*sqrt(2)/3 for this state. On the state
# itself qubit B is always |0> (C_B|ACD = 0) and rho_A carries a 1/3 coherence
# (C_A|BCD = 2/3); the quoted value is what rho_A gives with the coherence dropped. The
# state-derived values are checked here, the quoted vectors in PAPER_TRIANGLE.
PHI_TRIANGLE = PaperCase(
    case_id="phi-triangle",
    n_qubits=4,
    basis_terms=[("0000", 1), ("0010", 1), ("1010", 1)],
    expected=[
        ExpectedValue(quantity="C[0,1|rest]", expected=2 / 3, provenance="C(|phi>_AB|CD) = 2/3"),
        ExpectedValue(quantity="C[0|rest]", expected=2 / 3, provenance="direct computation; the example quotes 2*sqrt(2)/3"),
        ExpectedValue(quantity="C[1|rest]", expected=0.0, provenance="direct computation (B is |0>); the example quotes 2*sqrt(2)/3"),
        ExpectedValue(quantity="chain_lower", expected=4 / 9, provenance="|a - b| with the state's own a = 4/9, b = 0"),
        ExpectedValue(quantity="chain_mid", expected=4 / 9, provenance="c = C^2(|phi>_AB|CD) = 4/9"),
        ExpectedValue(quantity="chain_upper", expected=4 / 9, provenance="a + b with the state's own a = 4/9, b = 0"),
        ExpectedValue(quantity="a_vec_x", expected=4 / 9, provenance="collinear triangle for a = c = 4/9, b = 0"),
        ExpectedValue(
            quantity="a_vec_y",
            expected=0.0,
            tolerance=1e-7,
            provenance="collinear triangle for a = c = 4/9, b = 0; square root of a rounding-level discriminant",
        ),
        ExpectedValue(quantity="c_vec_x", expected=4 / 9, provenance="c_vec = c e1"),
    ],
)

PAPER_TRIANGLE = PaperCase(
    case_id="paper-triangle",
    n_qubits=4,
    basis_terms=[("0000", 1), ("0010", 1), ("1010", 1)],
    expected=[
        ExpectedValue(quantity="paper_a_vec_x", expected=2 / 9, provenance="a_vec = 2/9 e1 + 2 sqrt(15)/9 e2"),
        ExpectedValue(quantity="paper_a_vec_y", expected=2 * SQRT15 / 9, provenance="a_vec = 2/9 e1 + 2 sqrt(15)/9 e2"),
        ExpectedValue(quantity="paper_b_vec_x", expected=2 / 9, provenance="b_vec = 2/9 e1 - 2 sqrt(15)/9 e2"),
        ExpectedValue(quantity="paper_b_vec_y", expected=-2 * SQRT15 / 9, provenance="b_vec = 2/9 e1 - 2 sqrt(15)/9 e2"),
        ExpectedValue(quantity="paper_c_vec_x", expected=4 / 9, provenance="c_vec = 4/9 e1"),
        ExpectedValue(quantity="paper_c_vec_y", expected=0.0, provenance="c_vec = 4/9 e1"),
    ],
)

EXAMPLE1 = PaperCase(
    case_id="example1-cor1",
    n_qubits=6,
    basis_terms=[("000000", 1), ("101000", 1)],
    expected=[
        ExpectedValue(quantity="C[0,2]", expected=1.0, provenance="decoupled ABC1 example: C(rho_AC1) = 1"),
        ExpectedValue(quantity="Ca[0,2]", expected=1.0, provenance="decoupled ABC1 example: C_a(rho_AC1) = 1"),
        ExpectedValue(quantity="C[0,1]", expected=0.0, provenance="decoupled ABC1 example: C(rho_AB) = 0"),
        ExpectedValue(quantity="Ca[1,2]", expected=0.0, provenance="decoupled ABC1 example: C_a(rho_BC1) = 0"),
        ExpectedValue(quantity="Ca[2,3]", expected=0.0, provenance="decoupled ABC1 example: C_a(rho_C1C2) = 0"),
        ExpectedValue(quantity="C[0,1,2|rest]", expected=0.0, provenance="direct computation: ABC1 is decoupled from C2C3C4"),
        # the J-sum contains j = A, so C_a^2(rho_C1A) = 1 cancels the leading term
        ExpectedValue(quantity="corollary1_lower", expected=0.0, provenance="assistance-form ABC1 lower bound as stated, by direct substitution"),
        ExpectedValue(
            quantity="corollary1_lower_paper_tally",
            expected=1.0,
            provenance="quoted C >= 1 from the assistance-form bound; reproduced by omitting the j = A term",
        ),
        ExpectedValue(quantity="corollary2_lower", expected=0.0, provenance="decoupled ABC1 example: C >= 0 from the concurrence-form bound"),
        ExpectedValue(quantity="corollary2_upper", expected=2.0, provenance="C_a^2(rho_AC1) counted in the middle sum and in the J-sum"),
    ],
)

EXAMPLE2 = PaperCase(
    case_id="example2-cor2",
    n_qubits=6,
    basis_terms=[("000000", 1), ("001100", 1)],
    expected=[
        ExpectedValue(quantity="C[2,3]", expected=1.0, provenance="C1C2 Bell-pair example: C(rho_C1C2) = 1"),
        ExpectedValue(quantity="Ca[2,3]", expected=1.0, provenance="C1C2 Bell-pair example: C_a(rho_C1C2) = 1"),
        ExpectedValue(quantity="C[2,4]", expected=0.0, provenance="C1C2 Bell-pair example: C(rho_C1C3) = 0"),
        ExpectedValue(quantity="Ca[0,2]", expected=0.0, provenance="C1C2 Bell-pair example: C_a(rho_AC1) = 0"),
        ExpectedValue(quantity="corollary2_lower", expected=1.0, provenance="C1C2 Bell-pair example: C >= 1 from the concurrence-form bound, the better bound here"),
        ExpectedValue(quantity="corollary1_lower", expected=-1.0, provenance="direct substitution into the assistance-form bound"),
        ExpectedValue(quantity="corollary1_lower_clamped", expected=0.0, provenance="C1C2 Bell-pair example: C >= 0 from the assistance-form bound"),
        ExpectedValue(quantity="C[0,1,2|rest]", expected=1.0, provenance="direct computation: C1C2 Bell pair straddles the cut"),
    ],
)

W5_UNIFORM = PaperCase(
    case_id="wclass-uniform-5",
    n_qubits=5,
    w_coefficients=[1 / math.sqrt(5)] * 5,
    expected=[
        ExpectedValue(quantity="C[0,1]", expected=0.4, provenance="C(rho_pq) = 2|a_p a_q| for W-class states"),
        ExpectedValue(quantity="Ca[0,1]", expected=0.4, provenance="C(rho_ApAq) = C_a(rho_ApAq) for W-class states"),
        ExpectedValue(quantity="wclass_lower[0,1]", expected=0.0, provenance="symmetry makes both sums equal"),
        ExpectedValue(quantity="wclass_mid[0,1]", expected=24 / 25, provenance="two-qubit marginal with Tr(rho^2) = 13/25"),
        ExpectedValue(quantity="wclass_upper[0,1]", expected=32 / 25, provenance="2(4/25) + 3(4/25 + 4/25)"),
    ],
)

W3_PRODUCT = PaperCase(
    case_id="wclass-product-3",
    n_qubits=3,
    w_coefficients=[1, 0, 0],
    expected=[
        ExpectedValue(quantity="wclass_lower[0,1]", expected=0.0, provenance="|100> is a product state"),
        ExpectedValue(quantity="wclass_mid[0,1]", expected=0.0, provenance="|100> is a product state"),
        ExpectedValue(quantity="wclass_upper[0,1]", expected=0.0, provenance="|100> is a product state"),
    ],
)

PAPER_CASES: list[PaperCase] = [
    SATURATING_4Q,
    PHI_TRIANGLE,
    PAPER_TRIANGLE,
    EXAMPLE1,
    EXAMPLE2,
    W5_UNIFORM,
    W3_PRODUCT,
]
