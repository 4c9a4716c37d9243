"""
Text and JSON renderings of certificates
"""

import sys

TEXT = 'text'
JSON = 'json'
FORMATS = (TEXT, JSON)

# what each criterion rests on, for the text summary
CRITERIA = {
    'simplex-qp': "global maximum of ACS' over the product of simplices (face enumeration)",
    'min-multiplicity-at-least-5': "m1 >= 5 forces max ACS' < 0",
    'focal-multiplicity-gap': 'focal manifold bound, negative when 4 m2 > 3 m1 + 10',
    'clifford-stiefel-dimension': 'Clifford-Stiefel variety bound, negative when k > (7m + 14) / (4 delta(m))',
    'frobenius-submultiplicativity': 'closed-form bound from |XY| <= |X| |Y| for Killing-unit pairs',
    'su-even-n-closed-form': 'max ACS = -b_n with b_n = (18 - n) / (16 n^2)',
    'su-odd-n-bracket': 'b_n bracketed by the even neighbours of n',
    'explicit-even-n': 'explicit pair built from the even-n minimizer',
    'padded-odd-n': 'explicit pair built from the (n-1) minimizer padded by zeros',
    'sampled-witness': 'sampled pair with positive ACS',
    'none': 'nothing certifies the sign',
}


def render_text(cert):
    """ One-screen summary of a certificate

    :type cert: acscert.structures.certificate.AcsCertificate
    :rtype: str
    """
    constants = cert.index_constants
    lines = [
        'family:      {}'.format(cert.family),
        'parameters:  {}'.format(', '.join('{}={}'.format(k, cert.parameters[k]) for k in sorted(cert.parameters))),
    ]
    if cert.verdict is not None:
        lines += [
            'verdict:     {}'.format(cert.verdict),
            'criterion:   {} ({})'.format(cert.criterion, CRITERIA.get(cert.criterion, '')),
            'ACS value:   {!r} ({})'.format(cert.acs_value_or_bound, cert.method),
        ]
    if cert.constant_term is not None:
        lines.append('constant:    {!r}'.format(cert.constant_term))
    lines.append('index:       ind >= b_1 * {} (ACS), b_1 * {} (any immersion), ambient dimension {}'.format(
        constants['acs'], constants['robust'], constants['ambient_dim']))
    if cert.samples is not None:
        lines.append('sampling:    {} samples, seed {}'.format(cert.samples, cert.seed))
    lines.append('acscert:     {}'.format(cert.tool_version))
    return '\n'.join(lines)


def emit(cert, fmt=JSON, stream=None):
    """ Writes the certificate, JSON as a single line

    :param fmt: TEXT or JSON
    :param stream: Defaults to stdout
    """
    if fmt not in FORMATS:
        raise ValueError('unknown format {!r}, expected one of {}'.format(fmt, ', '.join(FORMATS)))
    stream = stream or sys.stdout
    stream.write(cert.to_json() if fmt == JSON else render_text(cert))
    stream.write('\n')
