"""
Verification pipelines behind the subcommands of manager.py.

Every pipeline returns an AcsCertificate (the catalog pipeline a list of them). Proof-grade
verdicts come from the simplex programs or from closed-form bounds; sampling only ever
finds witnesses.
"""

import logging
from fractions import Fraction

import acscert
from acscert.bounds import index_bound_constant
from acscert.catalog import ExampleFamily, check_conditions, clifford_system, clifford_stiefel_point, fkm_polynomial, \
    fkm_multiplicities, get_families, by_tag
from acscert.catalog.providerbase import FKM, FOCAL
from acscert.errors import NoIsoparametricFamily, InvalidParameter
from acscert.isoparametric import Multiplicities, max_acs, vertex_program, curvature_normals, build_sff, acs_from_sff, \
    realize_pair, simple_upper_bound, focal_acs_upper, focal_ricci_lower
from acscert.lie import EmbeddingFamily, b_n_closed, b_n_bracket, estimate_a_n, positive_witness, sample_min_acs
from acscert.optimize import FaceEnumerationSolver, grid_oracle
from acscert.structures.certificate import AcsCertificate, index_constants, CERTIFIED_NEGATIVE, CERTIFIED_NONPOSITIVE, \
    POSITIVE_WITNESS, INCONCLUSIVE, UPPER_BOUND_ONLY, SIMPLEX_QP, CLOSED_FORM_BOUND, SAMPLING, EXPLICIT_WITNESS
from acscert.utils.rational import format_rational

FOCAL_GAP = 'focal-multiplicity-gap'
FROBENIUS = 'frobenius-submultiplicativity'
EVEN_N_CLOSED_FORM = 'su-even-n-closed-form'
ODD_N_BRACKET = 'su-odd-n-bracket'
SAMPLED_WITNESS = 'sampled-witness'
NONE = 'none'

GROUP_KINDS = {'su': EmbeddingFamily.su, 'sp': EmbeddingFamily.sp}


def _solver():
    return FaceEnumerationSolver.from_config(acscert.current_config)


def _grid_check(m, result, step):
    """ Cross-checks the four vertex programs against the grid oracle """
    normals = curvature_normals(m)
    worst, points, consistent, used_step = 0.0, 0, True, step
    for k, solution in enumerate(result.solutions):
        grid = grid_oracle(vertex_program(normals, m, k), step)
        used_step = grid.step
        points += grid.points_evaluated
        slack = 1e-9 * max(1.0, abs(grid.value))
        if not grid.value - slack <= solution.value <= grid.value + grid.resolution_bound + slack:
            logging.warning('Vertex program %d of %r: simplex max %.12g outside grid bracket [%.12g, %.12g]',
                            k, m, solution.value, grid.value, grid.value + grid.resolution_bound)
            consistent = False
        worst = max(worst, solution.value - grid.value)
    return {'step': used_step, 'points_evaluated': points, 'max_gap': worst, 'consistent': consistent}


def _regular_leaf(m, tag, parameters, criterion=None, oracle=False, grid_step=None):
    result = max_acs(m, _solver())
    stats = result.stats()
    stats['simple_upper_bound'] = simple_upper_bound(m)
    if oracle:
        stats['grid_oracle'] = _grid_check(m, result, grid_step or acscert.current_config.APP_QP_GRID_STEP)

    value = result.value
    if value < 0:
        verdict = CERTIFIED_NEGATIVE
    elif m.m1 == 1:
        verdict = UPPER_BOUND_ONLY
    elif value == 0:
        verdict = CERTIFIED_NONPOSITIVE
    else:
        # all distributions have dimension >= 2, so a tangent pair attains the argmax
        X, N = realize_pair(m, result.s, result.t)
        sff = build_sff(curvature_normals(m), m)
        stats['witness_acs'] = acs_from_sff(sff, sff.mean_curvature(), X, N)
        verdict = POSITIVE_WITNESS

    if criterion is None:
        criterion = SIMPLEX_QP if verdict in (CERTIFIED_NEGATIVE, CERTIFIED_NONPOSITIVE) else NONE
    return AcsCertificate(tag, parameters, verdict, criterion, value, SIMPLEX_QP, None, index_constants(m.n + 2),
                          solver_stats=stats)


def _focal_leaf(m, tag, parameters, criterion=None, inequality=None):
    bound = focal_acs_upper(m)
    stats = {
        'focal_dim': m.focal_dim,
        'ricci_lower_bound': focal_ricci_lower(m),
        'inequality': inequality or 'm2 > (3 m1 + 10) / 4: {} > {}'.format(m.m2, format_rational(Fraction(3 * m.m1 + 10, 4))),
    }
    if bound < 0:
        verdict, criterion = CERTIFIED_NEGATIVE, criterion or FOCAL_GAP
    else:
        verdict, criterion = UPPER_BOUND_ONLY, NONE
    return AcsCertificate(tag, parameters, verdict, criterion, bound, CLOSED_FORM_BOUND, None, index_constants(m.n + 2),
                          solver_stats=stats)


def isoparametric(m1, m2, focal=False, oracle=False, grid_step=None):
    """ Sign of ACS on the minimal isoparametric hypersurface with multiplicities (m1, m2), or on its focal manifold M+.

    Example: ``manager.py isoparametric --m1 6 --m2 9`` certifies ACS < 0 through the simplex programs,
    with the index constants of R^32.

    :param focal: Bound ACS on M+ instead of the minimal leaf
    :param oracle: Cross-check the simplex programs against the grid oracle
    :param grid_step: Grid spacing of the oracle, QP.GRID_STEP if omitted
    :rtype: AcsCertificate
    """
    if focal:
        m = Multiplicities(m1, m2, ordered=False)
        return _focal_leaf(m, 'isoparametric(m1={},m2={})/{}'.format(m1, m2, FOCAL), {'m1': m1, 'm2': m2})
    m = Multiplicities(m1, m2)
    return _regular_leaf(m, 'isoparametric(m1={},m2={})/regular-minimal'.format(m1, m2), {'m1': m1, 'm2': m2},
                         oracle=oracle, grid_step=grid_step)


def _sampling_defaults(samples, seed):
    cfg = acscert.current_config
    return (cfg.APP_SAMPLING_SAMPLES if samples is None else samples,
            cfg.APP_SAMPLING_SEED if seed is None else seed)


def _sweep_stats(family, sweep):
    stats = {
        'sampled_minimum': sweep.minimum,
        'sampled_maximum': sweep.maximum,
        'constant_term_exact': format_rational(family.constant_term()),
    }
    if sweep.proven_bound is not None:
        respected = bool(sweep.maximum <= float(sweep.proven_bound) + 1e-9)
        if not respected:
            logging.warning('%s: sampled ACS %.12g exceeds the proven bound %s', family.name, sweep.maximum, sweep.proven_bound)
        stats['proven_bound'] = format_rational(sweep.proven_bound)
        stats['bound_respected'] = respected
    return stats


def _certificate(family, parameters, verdict, criterion, value, method, stats, sweep):
    return AcsCertificate(family.name, parameters, verdict, criterion, value, method, float(family.constant_term()),
                          index_constants(family.ambient_dim), seed=sweep.seed, samples=sweep.samples, solver_stats=stats)


def _sampling_only(family, parameters, sweep, stats):
    if sweep.maximum > 0:
        return _certificate(family, parameters, POSITIVE_WITNESS, SAMPLED_WITNESS, sweep.maximum, SAMPLING, stats, sweep)
    return _certificate(family, parameters, INCONCLUSIVE, NONE, sweep.minimum, SAMPLING, stats, sweep)


def _su_verdict(family, stats):
    """ (verdict, criterion, value, method) for SU(n) from the closed forms of b_n """
    n = family.n
    if n > 18:
        witness = positive_witness(n)
        stats['witness_construction'] = witness.construction
        stats['witness_killing_defect'] = witness.killing_defect()
        return POSITIVE_WITNESS, witness.construction, witness.value, EXPLICIT_WITNESS
    if n % 2 == 0:
        b = b_n_closed(n)
        stats['b_n'] = format_rational(b)
        if b == 0:
            return CERTIFIED_NONPOSITIVE, EVEN_N_CLOSED_FORM, 0.0, CLOSED_FORM_BOUND
        return CERTIFIED_NEGATIVE, EVEN_N_CLOSED_FORM, float(-b), CLOSED_FORM_BOUND
    lower, upper = b_n_bracket(n)
    stats['b_n_bracket'] = [format_rational(lower), format_rational(upper)]
    cfg = acscert.current_config
    a_n = estimate_a_n(n, cfg.APP_MINIMIZER_SEARCH_SAMPLES, 0, cfg.APP_MINIMIZER_RESTARTS, cfg.APP_MINIMIZER_DESCENT_TOLERANCE)
    stats['a_n_estimate'] = a_n
    stats['b_n_estimate'] = 1.0 / (n * n) + a_n / (2 * n)
    # lower > 0 for every odd n <= 17
    return CERTIFIED_NEGATIVE, ODD_N_BRACKET, float(-lower), CLOSED_FORM_BOUND


def group(kind, n, samples=None, seed=None, sampling_only=False):
    """ Sign of ACS on SU(n) or Sp(n) embedded in its matrix space.

    Example: ``manager.py group --kind su --n 20`` finds the explicit witness with ACS = 1/3200.

    :param kind: 'su' or 'sp'
    :param samples: Size of the sampling sweep attached to the certificate, SAMPLING.SAMPLES if omitted
    :param seed: Sweep seed, SAMPLING.SEED if omitted
    :param sampling_only: Skip the closed forms, report the sweep alone
    :rtype: AcsCertificate
    """
    if kind not in GROUP_KINDS:
        raise InvalidParameter('unknown group kind {!r}, expected su or sp'.format(kind))
    family = GROUP_KINDS[kind](n)
    samples, seed = _sampling_defaults(samples, seed)
    sweep = sample_min_acs(family, samples, seed)
    stats = _sweep_stats(family, sweep)
    parameters = {'n': n}

    if sampling_only:
        return _sampling_only(family, parameters, sweep, stats)
    if family.kind == 'SU':
        verdict, criterion, value, method = _su_verdict(family, stats)
    else:
        verdict, criterion, value, method = CERTIFIED_NEGATIVE, FROBENIUS, float(family.proven_bound()), CLOSED_FORM_BOUND
    return _certificate(family, parameters, verdict, criterion, value, method, stats, sweep)


def grassmannian(d, n, samples=None, seed=None, sampling_only=False, strict=False):
    """ Sign of ACS on the quaternionic Grassmannian Gr_d(H^n) embedded in the traceless quaternion-Hermitian matrices.

    :param strict: Sample tangent pairs with vanishing full quaternionic trace tr(XN*)
    :rtype: AcsCertificate
    """
    family = EmbeddingFamily.grassmannian(d, n)
    samples, seed = _sampling_defaults(samples, seed)
    sweep = sample_min_acs(family, samples, seed, strict=strict)
    stats = _sweep_stats(family, sweep)
    stats['strict'] = strict
    parameters = {'d': d, 'n': n}

    if sampling_only:
        return _sampling_only(family, parameters, sweep, stats)
    return _certificate(family, parameters, CERTIFIED_NEGATIVE, FROBENIUS, float(family.proven_bound()), CLOSED_FORM_BOUND,
                        stats, sweep)


def certify_family(family):
    """ Certificate of one catalog family, with the criterion check_conditions names

    :type family: acscert.catalog.ExampleFamily
    :rtype: AcsCertificate
    """
    condition = check_conditions(family, _solver())
    parameters = dict(family.parameters)
    if family.leaf == FOCAL:
        m = Multiplicities(*family.focal_pair, ordered=False)
        cert = _focal_leaf(m, family.tag, parameters, condition.criterion, condition.inequality)
    else:
        cert = _regular_leaf(family.multiplicities, family.tag, parameters,
                             condition.criterion if condition.certified else None)
    cert.solver_stats['condition'] = condition.to_jsonable()
    cert.solver_stats['exceptional'] = family.exceptional
    if condition.certified != cert.certified:
        logging.warning('%s: criterion %s and verdict %s disagree', family.tag, condition.criterion, cert.verdict)
    return cert


def catalog(family=None):
    """ Certificates of every configured catalog family, or of the one named by its tag

    :param family: Tag such as FKM(k=2,m=3)/focal-M+
    :rtype: list of AcsCertificate
    """
    families = [by_tag(family)] if family else get_families()
    return [certify_family(f) for f in families]


def clifford(m, k):
    """ Clifford system P_0..P_m on R^(2 k delta(m)) and the focal manifold M+ of its FKM family.

    The relations are checked in integer arithmetic. ACS < 0 on M+ follows from k > (7m + 14) / (4 delta(m)).

    :rtype: AcsCertificate
    """
    system = clifford_system(m, k)
    stats = {'l': system.l, 'relations_hold': system.relations_hold()}
    point = clifford_stiefel_point(system)
    stats['stiefel_point_found'] = point is not None
    if point is not None:
        stats['fkm_polynomial_at_point'] = fkm_polynomial(system, point)
    parameters = {'m': m, 'k': k}

    try:
        fkm_multiplicities(m, k)
    except NoIsoparametricFamily as e:
        logging.info('%s', e)
        stats['isoparametric'] = False
        return AcsCertificate('clifford(k={},m={})'.format(k, m), parameters, INCONCLUSIVE, NONE, None, CLOSED_FORM_BOUND, None,
                              index_constants(system.dim), solver_stats=stats)

    cert = certify_family(ExampleFamily(FKM, parameters, FOCAL))
    if not stats['relations_hold']:
        logging.warning('%r violates the Clifford relations', system)
        cert.verdict, cert.criterion = INCONCLUSIVE, NONE
    cert.solver_stats.update(stats)
    return cert


def constants(dim):
    """ Index-bound constants for ambient dimension dim; the certificate carries no verdict

    Example: ``manager.py constants --dim 4`` gives acs 1/6 and robust 1/91.

    :rtype: AcsCertificate
    """
    constant = index_bound_constant(dim)
    stats = {'veronese_dim': constant.veronese_target_dim, 'identity_holds': constant.identity_holds()}
    return AcsCertificate('constants(d={})'.format(dim), {'dim': dim}, None, None, None, None, None, index_constants(dim),
                          solver_stats=stats)
