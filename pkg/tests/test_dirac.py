"""Metric, gamma matrices, Dirac and wave operators, certified spectra,
eigenmode catalogs, chirality and the spectral action.

Every numeric value here was frozen from an exact computation; nothing is
asserted on floating point evidence.
"""

from fractions import Fraction

import pytest

from groupgeo.cyclotomic import cyclo, rat
from groupgeo.dirac import (
    Spectrum,
    casimir,
    chirality,
    class_translation_sum,
    dirac_candidates,
    dirac_operator,
    eigenmode_catalog,
    exp_taylor_coefficients,
    gamma_matrices,
    metric,
    metric_tensor,
    minimal_polynomial,
    minimal_polynomial_check,
    poly_from_roots,
    spectral_action,
    spectrum,
    spinor_blocks,
    translation_block,
    wave_candidates,
    wave_eigenmode_catalog,
    wave_operator,
)
from groupgeo.errors import (
    AsymmetricSpectrumError,
    IncompleteSpectrumError,
    SingularMetricError,
    UnsupportedGroupError,
)
from groupgeo.linalg import Mat
from groupgeo.representations import builtin_rep, irreducibles


# -- metric -----------------------------------------------------------------

def test_metric_values_at_mu_one(cls_d6):
    m = metric(cls_d6, 1)
    assert m.eta == Mat([[2, 1, 1], [1, 2, 1], [1, 1, 2]])
    quarter = Fraction(1, 4)
    assert m.eta_inv == Mat([[1 - quarter, -quarter, -quarter],
                             [-quarter, 1 - quarter, -quarter],
                             [-quarter, -quarter, 1 - quarter]])
    assert m.eta @ m.eta_inv == Mat.identity(3)


def test_metric_singular(cls_d6):
    with pytest.raises(SingularMetricError, match="mu = -1/3 is singular"):
        metric(cls_d6, Fraction(-1, 3))


def test_metric_is_conjugation_invariant(cls_d6, d6):
    m = metric(cls_d6, Fraction(2, 7))
    for g in range(12):
        for apos, a in enumerate(cls_d6.members):
            for bpos, b in enumerate(cls_d6.members):
                left = m.eta[cls_d6.position(d6.conj(d6.inv(g), a)), bpos]
                right = m.eta[apos, cls_d6.position(d6.conj(g, b))]
                assert left == right


def test_coframe_coefficients(cls_d6):
    m = metric(cls_d6, 1)
    assert m.coframe_coefficients(0) == [rat(2), rat(1), rat(1)]
    assert m.coframe_coefficients(2) == [rat(1), rat(1), rat(2)]


def test_metric_tensor_wedge_vanishes(cal_d6):
    from groupgeo.curvature import wedge_of_tensor
    for mu in (Fraction(1), Fraction(2, 7)):
        assert wedge_of_tensor(metric_tensor(cal_d6, mu)).is_zero()


# -- casimir and gammas -----------------------------------------------------

def test_casimir_scalar_values(rep_d6, cls_d6):
    assert casimir(rep_d6, cls_d6) == Mat.identity(2) * 6
    assert casimir(rep_d6, cls_d6, Fraction(1)) == Mat.identity(2) * Fraction(6, 5)


def test_casimir_on_trivial_rep(d6, cls_d6):
    trivial = irreducibles(d6)[0]
    assert casimir(trivial, cls_d6).is_zero()


def test_casimir_singularities(rep_d6, cls_d6):
    with pytest.raises(SingularMetricError, match="1 \\+ 4 mu"):
        casimir(rep_d6, cls_d6, Fraction(-1, 4))
    with pytest.raises(SingularMetricError, match="-1/3"):
        casimir(rep_d6, cls_d6, Fraction(-1, 3))


def test_gamma_matrices_at_mu_zero(rep_d6, cls_d6, d6):
    for variant in ("casimir", "metric"):
        gam = gamma_matrices(rep_d6, cls_d6, variant=variant)
        assert set(gam) == {7, 9, 11}
        for a in cls_d6:
            # class members are involutions: rho(a^-1) = rho(a)
            assert gam[a] == rep_d6(a) - Mat.identity(2)
        total = sum(gam.values(), Mat.zeros(2, 2))
        assert total == Mat.identity(2) * -3


def test_gamma_variants_differ_at_mu_one(rep_d6, cls_d6, d6):
    t = d6.index("sr")
    cas = gamma_matrices(rep_d6, cls_d6, Fraction(1), variant="casimir")
    met = gamma_matrices(rep_d6, cls_d6, Fraction(1), variant="metric")
    assert cas[t] == rep_d6(t) - Mat.identity(2) * Fraction(1, 5)
    assert met[t] == rep_d6(t) - Mat.identity(2) * Fraction(1, 4)
    assert cas[t] != met[t]
    assert sum(cas.values(), Mat.zeros(2, 2)) == Mat.identity(2) * Fraction(-3, 5)
    assert sum(met.values(), Mat.zeros(2, 2)) == Mat.identity(2) * Fraction(-3, 4)


def test_gamma_unknown_variant(rep_d6, cls_d6):
    with pytest.raises(ValueError, match="unknown gamma variant"):
        gamma_matrices(rep_d6, cls_d6, variant="mystery")


# -- translation structure --------------------------------------------------

def test_class_translation_sum(cls_d6, d6):
    d0 = class_translation_sum(cls_d6)
    expect = Mat.zeros(12, 12)
    for a in cls_d6:
        expect = expect + d6.right_translation(a)
    assert d0 == expect
    assert d0.transpose() == d0


def test_translation_block_exchange(rep_d6, cls_d6, d6):
    # conjugating the off-diagonal blocks by one translation twists them
    # into each other with a sixth-root factor
    d1 = translation_block(rep_d6, cls_d6, 1, 0)
    d2 = translation_block(rep_d6, cls_d6, 0, 1)
    rt = d6.right_translation(d6.index("sr"))
    assert rt @ d1 == (d2 @ rt) * cyclo(6, 2)
    assert rt @ d2 == (d1 @ rt) * cyclo(6, 4)


def test_diagonal_translation_blocks(rep_d6, cls_d6):
    # the spinor has zero diagonal on reflections, so these blocks vanish
    assert translation_block(rep_d6, cls_d6, 0, 0).is_zero()
    assert translation_block(rep_d6, cls_d6, 1, 1).is_zero()


# -- the Dirac operator -----------------------------------------------------

def test_dirac_block_form(dirac0_d6, rep_d6, cls_d6):
    blocks = spinor_blocks(dirac0_d6, 2)
    d0 = class_translation_sum(cls_d6)
    assert blocks[0][0] == -d0
    assert blocks[1][1] == -d0
    assert blocks[0][1] == translation_block(rep_d6, cls_d6, 0, 1)
    assert blocks[1][0] == translation_block(rep_d6, cls_d6, 1, 0)


def test_dirac_free_form_at_mu_zero(dirac0_d6, rep_d6, cls_d6, d6):
    # the connection part exactly cancels the -id of each partial
    # translation, leaving the bare gamma-weighted translations
    gam = gamma_matrices(rep_d6, cls_d6)
    free = Mat.zeros(24, 24)
    for a in cls_d6:
        free = free + gam[a].kron(d6.right_translation(a))
    assert dirac0_d6 == free


def test_dirac_algebraic_identities(dirac0_d6):
    assert dirac0_d6.conj_transpose() == dirac0_d6
    assert dirac0_d6.trace() == rat(0)
    assert (dirac0_d6 @ dirac0_d6).trace() == rat(144)
    cube = dirac0_d6 @ dirac0_d6 @ dirac0_d6
    assert cube == dirac0_d6 * 9


def test_dirac_spectrum_at_mu_zero(dirac0_d6):
    spect = spectrum(dirac0_d6, dirac_candidates())
    assert spect.pairs == ((rat(-3), 8), (rat(0), 8), (rat(3), 8))
    assert spect.dimension == 24
    assert spect.multiplicity(3) == 8
    assert spect.multiplicity(7) == 0


def test_dirac_minimal_polynomial(dirac0_d6):
    coeffs = minimal_polynomial(dirac0_d6)
    assert coeffs == [rat(0), rat(-9), rat(0), rat(1)]
    assert coeffs == poly_from_roots([0, 3, -3])
    assert minimal_polynomial_check(dirac0_d6)
    assert minimal_polynomial_check(dirac0_d6, [0, 3, -3])
    assert not minimal_polynomial_check(dirac0_d6, [0, 3])


def test_dirac_mu_shift_identity(dirac0_d6, dirac1_d6, cls_d6):
    # the entire mu dependence is a multiple of the centered translation sum
    c = Fraction(4, 5)
    d0 = class_translation_sum(cls_d6)
    shift = Mat.identity(2).kron(d0 - Mat.identity(12) * 3)
    assert dirac1_d6 == dirac0_d6 + shift * c


def test_dirac_spectrum_at_mu_one(dirac1_d6):
    spect = spectrum(dirac1_d6, dirac_candidates(Fraction(1)))
    assert spect.pairs == (
        (rat(Fraction(-27, 5)), 4), (rat(-3), 4), (rat(Fraction(-12, 5)), 8),
        (rat(Fraction(-9, 5)), 4), (rat(Fraction(3, 5)), 4))
    assert dirac1_d6.conj_transpose() == dirac1_d6
    assert dirac1_d6.trace() == rat(Fraction(-288, 5))


def test_dirac_candidate_values():
    assert dirac_candidates() == [-3, 0, 3]
    assert Fraction(-27, 5) in dirac_candidates(Fraction(1))
    with pytest.raises(SingularMetricError):
        dirac_candidates(Fraction(-1, 4))


def test_dirac_operator_validates_inputs(rep_d6, lc_d6, d6):
    other = d6.conjugacy_class(d6.index("s"))
    with pytest.raises(ValueError, match="share one group and class"):
        dirac_operator(rep_d6, lc_d6, other)


# -- Spectrum type ----------------------------------------------------------

def test_spectrum_requires_exhaustion():
    with pytest.raises(IncompleteSpectrumError, match="misses 2 dimensions"):
        Spectrum([(rat(1), 2)], 4)


def test_spectrum_certification_fails_on_short_candidates(dirac0_d6):
    with pytest.raises(IncompleteSpectrumError):
        spectrum(dirac0_d6, [0, 3])


def test_spectrum_iteration(dirac0_d6):
    spect = spectrum(dirac0_d6, dirac_candidates())
    assert len(spect) == 3
    assert [m for _, m in spect] == [8, 8, 8]


# -- the wave operator ------------------------------------------------------

def test_wave_collapses_to_translation_sum(wave0_d6, cls_d6):
    d0 = class_translation_sum(cls_d6)
    assert wave0_d6 == d0 * 2 - Mat.identity(12) * 6


def test_wave_spectrum_at_mu_zero(wave0_d6):
    spect = spectrum(wave0_d6, wave_candidates())
    assert spect.pairs == ((rat(-12), 2), (rat(-6), 8), (rat(0), 2))
    assert wave0_d6.conj_transpose() == wave0_d6


def test_wave_spectrum_at_mu_one(cls_d6):
    op = wave_operator(cls_d6, Fraction(1))
    spect = spectrum(op, wave_candidates(Fraction(1)))
    assert spect.pairs == (
        (rat(Fraction(-15, 4)), 8), (rat(-3), 2), (rat(0), 2))


def test_wave_candidate_values(cls_d6):
    assert wave_candidates() == [-12, -6, 0]
    assert wave_candidates(Fraction(1)) == [Fraction(-15, 4), -3, 0]
    with pytest.raises(SingularMetricError):
        wave_candidates(Fraction(-1, 3))


def test_wave_annihilates_constants(wave0_d6):
    ones = [rat(1)] * 12
    assert all(v.is_zero() for v in wave0_d6 @ ones)


def test_wave_on_sign_character(wave0_d6, d6):
    chi = irreducibles(d6)[1].matrix_element(0, 0)
    out = wave0_d6 @ [v for v in chi]
    assert list(out) == [v * rat(-12) for v in chi]


def test_wave_minimal_polynomial(wave0_d6):
    assert minimal_polynomial(wave0_d6) == poly_from_roots([0, -6, -12])
    assert minimal_polynomial_check(wave0_d6, [0, -6, -12])


# -- eigenmode catalogs -----------------------------------------------------

def _statuses(catalog, name):
    fam = [f for f in catalog["families"] if f["name"] == name][0]
    return [c["status"] for c in fam["candidates"]]


def _summary(catalog, value):
    return [s for s in catalog["eigenvalues"] if s["value"] == rat(value)][0]


@pytest.fixture(scope="module")
def dirac_catalog(rep_d6, lc_d6, cls_d6):
    return eigenmode_catalog(rep_d6, lc_d6, cls_d6)


@pytest.fixture(scope="module")
def wave_catalog(cls_d6):
    return wave_eigenmode_catalog(cls_d6)


def test_dirac_catalog_family_statuses(dirac_catalog):
    assert _statuses(dirac_catalog, "translation-block images") == [
        "zero_vector", "eigenmode", "eigenmode", "zero_vector",
        "zero_vector", "eigenmode", "eigenmode", "zero_vector"]
    assert _statuses(dirac_catalog, "twisted first column") == [
        "eigenmode", "eigenmode", "zero_vector", "zero_vector"]
    assert _statuses(dirac_catalog, "twisted second column") == [
        "zero_vector", "zero_vector", "eigenmode", "eigenmode"]
    assert _statuses(dirac_catalog, "rotation ansatz") == ["eigenmode"] * 2
    assert _statuses(dirac_catalog, "reflection ansatz") == ["eigenmode"] * 2
    assert _statuses(dirac_catalog, "parity images of the rotation ansatz") == [
        "eigenmode"] * 2


def test_dirac_catalog_no_false_claims(dirac_catalog):
    # every nonzero candidate certifies at its claimed eigenvalue
    for fam in dirac_catalog["families"]:
        for cand in fam["candidates"]:
            assert cand["status"] in ("eigenmode", "zero_vector")


def test_dirac_catalog_zero_summary(dirac_catalog):
    s = _summary(dirac_catalog, 0)
    assert (s["claimed_candidates"], s["zero_vectors"]) == (8, 4)
    assert (s["verified"], s["claimed_span"]) == (4, 4)
    assert (s["multiplicity"], s["gap"]) == (8, 4)
    assert (s["completed_span"], s["complete"]) == (8, True)


def test_dirac_catalog_plus_three_summary(dirac_catalog):
    s = _summary(dirac_catalog, 3)
    assert (s["claimed_candidates"], s["zero_vectors"]) == (6, 2)
    assert (s["verified"], s["claimed_span"]) == (4, 4)
    assert (s["multiplicity"], s["gap"]) == (8, 4)
    assert (s["completed_span"], s["complete"]) == (8, True)
    assert all(c["verified"] for c in s["completions"])


def test_dirac_catalog_minus_three_summary(dirac_catalog):
    s = _summary(dirac_catalog, -3)
    assert (s["claimed_candidates"], s["zero_vectors"]) == (8, 2)
    # the parity images repeat directions already claimed: span stays 4
    assert (s["verified"], s["claimed_span"]) == (6, 4)
    assert (s["multiplicity"], s["gap"]) == (8, 4)
    assert (s["completed_span"], s["complete"]) == (8, True)


def test_dirac_catalog_structural_flags(dirac_catalog):
    assert dirac_catalog["sign_multiplication_anticommutes"] is True
    assert all(dirac_catalog["component_identities"].values())


def test_dirac_catalog_preconditions(rep_d6, lc_d6, cls_d6, d6):
    with pytest.raises(ValueError, match="mu = 0"):
        eigenmode_catalog(rep_d6, lc_d6, cls_d6, Fraction(1))
    sign2 = builtin_rep(d6, "sign2")
    with pytest.raises(UnsupportedGroupError, match="spinor"):
        eigenmode_catalog(sign2, lc_d6, cls_d6)


def test_dirac_catalog_requires_distinguished_connection(rep_d6, cal_d6, cls_d6):
    from groupgeo.connections import Connection
    other = Connection.from_chart(
        cal_d6, cal_d6.constant(-1), cal_d6.constant(0), cal_d6.constant(0))
    with pytest.raises(ValueError, match="distinguished"):
        eigenmode_catalog(rep_d6, other, cls_d6)


def test_wave_catalog_family_statuses(wave_catalog):
    assert _statuses(wave_catalog, "twisted second column") == [
        "zero_vector", "eigenmode"]
    assert _statuses(wave_catalog, "twisted first column") == [
        "eigenmode", "zero_vector"]
    assert _statuses(wave_catalog, "spinor matrix elements") == ["eigenmode"] * 8


def test_wave_catalog_summaries(wave_catalog):
    s0 = _summary(wave_catalog, 0)
    assert (s0["claimed_span"], s0["multiplicity"], s0["complete"]) == (1, 2, True)
    s12 = _summary(wave_catalog, -12)
    assert (s12["claimed_span"], s12["multiplicity"], s12["complete"]) == (1, 2, True)
    s6 = _summary(wave_catalog, -6)
    assert (s6["verified"], s6["claimed_span"]) == (8, 4)
    assert (s6["multiplicity"], s6["completed_span"], s6["complete"]) == (8, 8, True)


def test_wave_catalog_conjugate_redundancy(wave_catalog):
    assert wave_catalog["conjugates_coincide_reversed"] is True


def test_catalogs_unavailable_off_the_supported_group(s3_cls):
    with pytest.raises(UnsupportedGroupError):
        wave_eigenmode_catalog(s3_cls)


# -- chirality --------------------------------------------------------------

def test_chirality_properties(dirac0_d6):
    g = chirality(dirac0_d6)
    assert g @ g == Mat.identity(24)
    assert (g @ dirac0_d6 + dirac0_d6 @ g).is_zero()


def test_chirality_kernel_sign_choices(dirac0_d6):
    plus = chirality(dirac0_d6, kernel_sign=1)
    minus = chirality(dirac0_d6, kernel_sign=-1)
    assert plus != minus
    for g in (plus, minus):
        assert g @ g == Mat.identity(24)
        assert (g @ dirac0_d6 + dirac0_d6 @ g).is_zero()
    with pytest.raises(ValueError, match="kernel_sign"):
        chirality(dirac0_d6, kernel_sign=0)


def test_chirality_of_zero_operator():
    z = Mat.zeros(3, 3)
    assert chirality(z, candidates=[0]) == Mat.identity(3)
    assert chirality(z, candidates=[0], kernel_sign=-1) == Mat.identity(3) * -1


def test_chirality_rejects_asymmetric_spectrum(dirac1_d6):
    with pytest.raises(AsymmetricSpectrumError, match="-27/5"):
        chirality(dirac1_d6, dirac_candidates(Fraction(1)))


def test_chirality_with_explicit_candidates(dirac0_d6):
    g = chirality(dirac0_d6, candidates=[0, 3, -3])
    assert g == chirality(dirac0_d6)


# -- spectral action --------------------------------------------------------

@pytest.fixture(scope="module")
def spect0(dirac0_d6):
    return spectrum(dirac0_d6, dirac_candidates())


def test_spectral_action_battery(spect0):
    battery = {
        ((1,), 1): 24, ((1,), 3): 24,
        ((0, 1), 1): 144, ((0, 1), 3): 16,
        ((0, 0, 1), 1): 1296, ((0, 0, 1), 3): 16,
    }
    for (coeffs, lam), expect in battery.items():
        assert spectral_action(spect0, list(coeffs), lam) == rat(expect)


def test_spectral_action_exp_taylor(spect0):
    coeffs = exp_taylor_coefficients(4)
    assert coeffs == [1, -1, Fraction(1, 2), Fraction(-1, 6), Fraction(1, 24)]
    assert spectral_action(spect0, coeffs, 1) == rat(2958)
    assert spectral_action(spect0, coeffs, 3) == rat(14)


def test_spectral_action_callable_matches_coefficients(spect0):
    assert spectral_action(spect0, lambda u: u * u + 1, 1) == \
        spectral_action(spect0, [1, 0, 1], 1)


def test_spectral_action_scale_validation(spect0):
    with pytest.raises(ValueError, match="positive"):
        spectral_action(spect0, [1], 0)
    with pytest.raises(ValueError, match="nonnegative"):
        exp_taylor_coefficients(-1)


# -- the order-6 cross check ------------------------------------------------

def test_s3_dirac_spectrum(s3_group, s3_cls, s3_cal):
    from groupgeo.connections import levi_civita
    rep = builtin_rep(s3_group, "spinor")
    op = dirac_operator(rep, levi_civita(s3_cal), s3_cls)
    spect = spectrum(op, dirac_candidates())
    assert spect.pairs == ((rat(-3), 4), (rat(0), 4), (rat(3), 4))
    assert op.conj_transpose() == op
    assert (op @ op).trace() == rat(72)


def test_s3_wave_spectrum(s3_cls):
    op = wave_operator(s3_cls)
    spect = spectrum(op, wave_candidates())
    assert spect.pairs == ((rat(-12), 1), (rat(-6), 4), (rat(0), 1))


def test_s3_chirality_exists(s3_group, s3_cls, s3_cal):
    from groupgeo.connections import levi_civita
    rep = builtin_rep(s3_group, "spinor")
    op = dirac_operator(rep, levi_civita(s3_cal), s3_cls)
    g = chirality(op)
    assert g @ g == Mat.identity(12)
    assert (g @ op + op @ g).is_zero()
