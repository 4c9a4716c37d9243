"""
Machine-readable verdicts of a verification run
"""

import json

from acscert.bounds import acs_index_constant, robust_index_constant
from acscert.utils.rational import format_rational

CERTIFIED_NEGATIVE = 'certified-negative'
CERTIFIED_NONPOSITIVE = 'certified-nonpositive'
POSITIVE_WITNESS = 'positive-witness-found'
INCONCLUSIVE = 'inconclusive'
UPPER_BOUND_ONLY = 'upper-bound-only'

VERDICTS = (CERTIFIED_NEGATIVE, CERTIFIED_NONPOSITIVE, POSITIVE_WITNESS, INCONCLUSIVE, UPPER_BOUND_ONLY)

SIMPLEX_QP = 'simplex-qp'
CLOSED_FORM_BOUND = 'closed-form-bound'
SAMPLING = 'sampling'
EXPLICIT_WITNESS = 'explicit-witness'

METHODS = (SIMPLEX_QP, CLOSED_FORM_BOUND, SAMPLING, EXPLICIT_WITNESS)

EXIT_CODES = {
    None: 0,
    CERTIFIED_NEGATIVE: 0,
    CERTIFIED_NONPOSITIVE: 0,
    POSITIVE_WITNESS: 2,
    INCONCLUSIVE: 3,
    UPPER_BOUND_ONLY: 3,
}

FIELDS = ('family', 'parameters', 'verdict', 'criterion', 'acs_value_or_bound', 'method', 'constant_term',
          'index_constants', 'seed', 'samples', 'solver_stats', 'tool_version')


def index_constants(ambient_dim):
    """ The index_constants record for an embedding into R^ambient_dim """
    return {
        'acs': format_rational(acs_index_constant(ambient_dim)) if ambient_dim >= 2 else None,
        'robust': format_rational(robust_index_constant(ambient_dim)),
        'ambient_dim': ambient_dim,
    }


class AcsCertificate(object):

    """ Verdict of one verification run.

    :param family: Family tag, e.g. isoparametric(m1=6,m2=9)/regular-minimal
    :param parameters: Integer parameters of the family
    :type parameters: dict
    :param verdict: One of VERDICTS, None for runs that only compute constants
    :param criterion: What certifies the verdict, e.g. simplex-qp or focal-multiplicity-gap
    :param acs_value_or_bound: The maximum of ACS, an upper bound of it, or the sampled value
    :param method: One of METHODS
    :param constant_term: -4E + 2 dim / r^2 where the embedding is Einstein, else None
    :param index_constants: See index_constants()
    :param seed: Sampling seed, None if nothing was sampled
    :param samples: Number of samples, None if nothing was sampled
    :param solver_stats: Free-form diagnostics of the solvers involved
    :param tool_version: acscert version that produced the certificate
    """

    def __init__(self, family, parameters, verdict, criterion, acs_value_or_bound, method, constant_term, index_constants,
                 seed=None, samples=None, solver_stats=None, tool_version=None):
        if verdict is not None and verdict not in VERDICTS:
            raise ValueError('unknown verdict {!r}'.format(verdict))
        if method is not None and method not in METHODS:
            raise ValueError('unknown method {!r}'.format(method))
        if verdict == CERTIFIED_NEGATIVE and (method not in (SIMPLEX_QP, CLOSED_FORM_BOUND) or not acs_value_or_bound < 0):
            raise ValueError('certified-negative needs a negative value from simplex-qp or a closed-form bound')
        if method == SAMPLING and verdict not in (INCONCLUSIVE, POSITIVE_WITNESS):
            raise ValueError('sampling alone cannot certify a sign, got verdict {!r}'.format(verdict))
        if method == SAMPLING and (seed is None or samples is None):
            raise ValueError('sampling certificates must carry seed and sample count')

        if tool_version is None:
            from acscert import __version__ as tool_version

        self.family = family
        self.parameters = dict(parameters)
        self.verdict = verdict
        self.criterion = criterion
        self.acs_value_or_bound = acs_value_or_bound
        self.method = method
        self.constant_term = constant_term
        self.index_constants = dict(index_constants)
        self.seed = seed
        self.samples = samples
        self.solver_stats = dict(solver_stats or {})
        self.tool_version = tool_version

    @property
    def exit_code(self):
        return EXIT_CODES[self.verdict]

    @property
    def certified(self):
        return self.verdict in (CERTIFIED_NEGATIVE, CERTIFIED_NONPOSITIVE)

    def to_jsonable(self):
        """ Returns a json-serializable python object
        """
        return {name: getattr(self, name) for name in FIELDS}

    @classmethod
    def from_jsonable(cls, obj):
        missing = set(FIELDS) - set(obj)
        if missing:
            raise ValueError('certificate lacks field(s) {}'.format(', '.join(sorted(missing))))
        return cls(**{name: obj[name] for name in FIELDS})

    def to_json(self):
        """ Single-line JSON, byte-stable for equal certificates """
        return json.dumps(self.to_jsonable(), sort_keys=True, separators=(',', ':'), allow_nan=False)

    @classmethod
    def from_json(cls, text):
        return cls.from_jsonable(json.loads(text))

    def __eq__(self, other):
        return isinstance(other, AcsCertificate) and self.to_jsonable() == other.to_jsonable()

    def __repr__(self):
        return 'AcsCertificate({!r}, verdict={!r})'.format(self.family, self.verdict)
