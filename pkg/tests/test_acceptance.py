"""Acceptance criteria, one test per criterion, exact tolerances, timed.

Each test prints a single pass/fail line (run with -s to see them inline).
Mod-theta verdicts are bank-verified: the representation bank holds the
preprojective and preinjective orbits only, so claims quantified over all
indecomposables (including the regular ones) are accepted at bank level and
labeled as such.
"""

import time

from modlat import golden, perfect, reps, seqs, verify
from modlat.perfect import usable_bank
from modlat.terms import D222, D4

CFG = verify.Config()  # prime 5, seed 2026, max_dim 6, depth 6, samples 100


def _criterion(num, name, budget_s, fn):
    t0 = time.time()
    failures = fn()
    elapsed = time.time() - t0
    status = "PASS" if not failures else "FAIL"
    print(f"ACCEPTANCE {num:02d} {name}: {status} ({elapsed:.1f}s, budget {budget_s}s)")
    assert not failures, failures
    assert elapsed < budget_s, f"over budget: {elapsed:.1f}s >= {budget_s}s"


def _report_failures(report):
    return report.details if not report.passed else []


def test_criterion_01_h0_golden_table():
    def run():
        out = []
        table_reps = perfect.char_table_reps(CFG.prime, 0)
        seen = {}
        for row_no, (factors, want) in enumerate(golden.H0_TABLE, 1):
            elem = perfect.hplus_element(0, factors)
            got = perfect.signature(elem.term, table_reps)
            if got != want:
                out.append(f"row {row_no}: {got} != {want}")
            if got in seen:
                out.append(f"rows {seen[got]}/{row_no} coincide")
            seen[got] = row_no
        return out
    _criterion(1, "H+(0) golden table (27 signatures, exact)", 1.0, run)


def test_criterion_02_h1_golden_table():
    def run():
        out = []
        table_reps = perfect.char_table_reps(CFG.prime, 1)
        seen = {}
        for row_no, (factors, want) in enumerate(golden.H1_TABLE, 1):
            elem = perfect.hplus_element(1, factors)
            got = perfect.signature(elem.term, table_reps)
            if got != want:
                out.append(f"row {row_no}: {got} != {want}")
            if got in seen:
                out.append(f"rows {seen[got]}/{row_no} coincide")
            seen[got] = row_no
        return out
    _criterion(2, "H+(1) golden table (64 signatures, exact)", 5.0, run)


def test_criterion_03_preprojective_dim_vectors():
    def run():
        out = []
        for v, rows in golden.PREPROJ_DIMS.items():
            m = reps.projective(D222, v, CFG.prime)
            m1 = reps.coxeter_minus(m)
            m2 = reps.coxeter_minus(m1)
            if m1.dim_vector() != rows[1]:
                out.append(f"Phi- rho_{v}: {m1.dim_vector()} != {rows[1]}")
            if m2.dim_vector() != rows[2]:
                out.append(f"(Phi-)^2 rho_{v}: {m2.dim_vector()} != {rows[2]}")
            if not reps.coxeter_plus_mat(m).is_zero():
                out.append(f"Phi+ does not annihilate rho_{v}")
        return out
    _criterion(3, "preprojective dimension vectors (exact)", 1.0, run)


def test_criterion_04_admissible_class_theorem_d222():
    def run():
        return _report_failures(verify.check_adm_d222(CFG))
    _criterion(4, "admissible-class theorem D^{2,2,2} (length<=8, 100 reps, "
                  "p in {2,5}, zero failures)", 60.0, run)


def test_criterion_05_admissible_class_theorem_d4():
    def run():
        return _report_failures(verify.check_adm_d4(CFG))
    _criterion(5, "admissible-class theorem D^4 (length<=8, 100 reps, "
                  "p in {2,5}, zero failures)", 60.0, run)


def test_criterion_06_rewriting_soundness():
    def run():
        out = _report_failures(verify.check_seq_oracle(CFG, max_len=8))
        out += _report_failures(verify.check_seq_relations(CFG))
        out += _report_failures(verify.check_seq_actions(CFG))
        return out
    _criterion(6, "rewriting soundness (oracle <=8, identities, action tables)",
               30.0, run)


def test_criterion_07_d4_slice_count():
    def run():
        out = []
        for n in range(1, 11):
            got = len(seqs.enumerate_classes(n, D4, ending_letter=1))
            if got != n * (n + 1) // 2:
                out.append(f"slice {n}: {got} classes")
        return out
    _criterion(7, "D^4 slice count n(n+1)/2 for n<=10 (exact)", 5.0, run)


def test_criterion_08_form_equivalences():
    def run():
        return _report_failures(verify.check_forms(CFG))
    _criterion(8, "a/A-form, S-form and e=g*Z rows (100 reps, k,p<=2, "
                  "zero failures)", 60.0, run)


def test_criterion_09_gp_coincidence():
    def run():
        return _report_failures(verify.check_gp(CFG))
    _criterion(9, "comparison-element coincidence (100 random D^4 reps)", 10.0, run)


def test_criterion_10_perfectness_and_uv():
    def run():
        out = []
        bank = reps.rep_bank(CFG.bank_depth, CFG.prime, D222)
        usable = usable_bank(bank)
        for n in range(0, 4):
            for kind in "abc":
                for i in (1, 2, 3):
                    t = perfect.perfect_generator(kind, i, n)
                    try:
                        perfect.signature(t, usable)
                    except perfect.NotPerfectOnWitness as exc:
                        out.append(f"{kind}_{i}({n}): {exc}")
        for n in (0, 1, 2):
            report = perfect.verify_uv_boolean(n, bank)
            if not report.passed:
                out += [f"n={n}: {d}" for d in report.details]
        return out
    _criterion(10, "perfectness on bank (n<=3, depth 6) + 16-element merges "
                   "n in 0..2 (exact)", 30.0, run)


def test_criterion_11_lattice_law_substrate():
    def run():
        out = _report_failures(verify.check_lattice_laws(CFG))
        out += _report_failures(verify.check_subspace_oracle(CFG))
        return out
    _criterion(11, "modular/permutation laws 10000 triples per p in {2,3,5} + "
                   "enumeration oracles (zero failures)", 30.0, run)


def test_criterion_12_hasse_structure():
    def run():
        out = []
        bank = usable_bank(reps.rep_bank(CFG.bank_depth, CFG.prime, D222))
        want = {0: (27, 54), 1: (64, 144), 2: (64, 144)}
        for n, (nodes, edges) in want.items():
            poset = perfect.hplus_poset(n, bank)
            if len(poset.elements) != nodes:
                out.append(f"H+({n}): {len(poset.elements)} nodes")
            if not perfect.grid_order_isomorphic(poset):
                out.append(f"H+({n}) is not the chain-product grid")
            covers = perfect.covering_edges(poset)
            if len(covers) != edges:
                out.append(f"H+({n}): {len(covers)} covering edges")
            if perfect.find_m3_n5(poset) is not None:
                out.append(f"H+({n}) contains M3 or N5")
        dot0 = perfect.hasse_export([0], bank).splitlines()
        dot1 = perfect.hasse_export([1], bank).splitlines()
        n0 = len([l for l in dot0 if l.endswith('";') and "->" not in l])
        e0 = len([l for l in dot0 if "->" in l])
        n1 = len([l for l in dot1 if l.endswith('";') and "->" not in l])
        e1 = len([l for l in dot1 if "->" in l])
        if (n0, e0) != (27, 54):
            out.append(f"H+(0) DOT counts {(n0, e0)}")
        if (n1, e1) != (64, 144):
            out.append(f"H+(1) DOT counts {(n1, e1)}")
        return out
    _criterion(12, "Hasse structure: grids, no M3/N5, DOT counts (exact)", 10.0, run)
