NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
# eigenvalues in [-PSD_TOL, 0) are clamped to 0, anything lower is rejected
PSD_TOL = 1e-10
FILE_NORM_TOL = 1e-6

EQUALITY_TOL = 1e-9
SATISFIED_TOL = 1e-7

ENSEMBLE_PROB_TOL = 1e-10
ENSEMBLE_RECON_TOL = 1e-8
WCLASS_NORM_TOL = 1e-10
WCLASS_SUPPORT_TOL = 1e-12

MAX_QUBITS = 12
# eigenvalues of a reduced state below this are rounding noise and treated as exact zeros
RANK_TOL = 1e-13
