"""Shared table of CLI invocations whose output is pinned byte-for-byte.

Each golden file stores "exit N" on the first line, then the captured
stdout.  Regenerate with `python3 tests/regen_golden.py` after a
deliberate output change.
"""

import os

HERE = os.path.dirname(os.path.abspath(__file__))
WORKSPACE = os.path.join(HERE, "fixtures", "workspace.json")
GOLDEN_DIR = os.path.join(HERE, "golden")

CASES = [
    ("validate_space_x2", ["validate", "space", "X2"]),
    ("validate_space_bad", ["validate", "space", "bad"]),
    ("validate_submetric_gammay", ["validate", "submetric", "gammaY"]),
    ("validate_map_collapse", ["validate", "map", "collapse"]),
    ("product_x2_x2", ["product", "X2", "X2"]),
    ("coproduct_x2_s1", ["coproduct", "X2", "S1"]),
    ("equalizer_swap_ident", ["equalizer", "swap", "ident"]),
    ("pushout_worked", ["pushout", "--embedding", "i", "--along", "f",
                        "--oracle"]),
    ("pushout_worked_json", ["--json", "pushout", "--embedding", "i",
                             "--along", "f", "--oracle"]),
    ("cokernel_pair_i", ["cokernel-pair", "i"]),
    ("factorize_collapse", ["factorize", "collapse"]),
    ("kernel_metric_collapse", ["kernel-metric", "collapse"]),
    ("quotient_gammay", ["quotient", "gammaY"]),
    ("quotient_leq_true", ["quotient-leq", "collapse", "toS1"]),
    ("quotient_leq_false", ["quotient-leq", "toS1", "collapse"]),
    ("corelation_check_single", ["corelation", "check", "single"]),
    ("corelation_check_corrected", ["corelation", "check", "corrected"]),
    ("corelation_check_literal", ["corelation", "check", "literal"]),
    ("corelation_check_equiva", ["corelation", "check", "equivA"]),
    ("corelation_effective_equiva", ["corelation", "effective", "equivA"]),
    ("corelation_from_subset_a", ["corelation", "from-subset", "X2", "a"]),
    ("corelation_from_subset_empty", ["corelation", "from-subset", "X2", "-"]),
    ("idempotent_check_rho", ["idempotent", "check", "rho"]),
    ("idempotent_factor_rho", ["idempotent", "factor", "rho"]),
    ("idempotent_factor_rho_json", ["--json", "idempotent", "factor", "rho"]),
    ("relation_witness_rxy", ["relation", "witness", "R", "x", "y"]),
    ("selftest_metric_laws", ["selftest", "--suite", "metric-laws",
                              "--seed", "0"]),
]

BAD_INPUT_CASES = [
    ("missing_space", ["validate", "space", "nope"]),
    ("missing_workspace_flag", None),
]


def run_case(argv):
    """Run one invocation in-process; returns (exit_code, stdout_text)."""
    import contextlib
    import io

    from finmet import cli

    full = ["-w", WORKSPACE] + argv
    if argv and argv[0] == "selftest":
        full = argv
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(full)
    return code, buf.getvalue()


def golden_text(code, out):
    return "exit %d\n%s" % (code, out)
