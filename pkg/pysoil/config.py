"""
Cost configuration file creation and reading functions.

A cost config is key-value text, one entry per line:

    alpha   = const 1
    beta    = inv 2                     # 2/n
    gamma   = const 1
    delta   = const 1
    measure = node
    gate    = same-component tau=1      # repeatable
    penalty = fuzzy-small:6 eps=0.5     # repeatable

"""

from pysoil.constants import MEASURE_MODES
from pysoil.cost import CoefficientFn, CostSpec, GateSpec, PenaltySpec
from pysoil.errors import ConfigError, PySoilError
from pysoil.parser import ParseRules

COEFFICIENTS = ['alpha', 'beta', 'gamma', 'delta']


def parse_config(text):
    """
    Parses cost config content.

    Returns:
        opts: dictionary of the entries present in the file
            * Key: alpha/beta/gamma/delta (CoefficientFn), measure (str),
                   gates (list of GateSpec), penalties (list of PenaltySpec)
    """
    # Configure the parser
    parse_rules = ParseRules('cost')

    opts = {'gates': [], 'penalties': []}
    for lineno, line in enumerate(text.splitlines(), start=1):
        # Trailing comments are allowed
        line = line.split('#', 1)[0]
        if parse_rules.is_skippable(line):
            continue
        (key, tokens) = parse_rules.scan_config_entry(line, lineno)
        if key in COEFFICIENTS:
            if key in opts:
                raise ConfigError('line ' + str(lineno) + ': ' + key + ' set twice')
            try:
                opts[key] = CoefficientFn.parse(' '.join(tokens))
            except ConfigError as e:
                raise ConfigError('line ' + str(lineno) + ': ' + str(e))
        elif key == 'measure':
            if len(tokens) != 1 or tokens[0] not in MEASURE_MODES:
                raise ConfigError('line ' + str(lineno) + ': measure must be one of ['
                                  + ', '.join(MEASURE_MODES) + ']')
            opts['measure'] = tokens[0]
        elif key == 'gate':
            tau = 1.0
            if len(tokens) == 2:
                tau = parse_rules.scan_option(tokens[1], 'tau', lineno)
            elif len(tokens) != 1:
                raise ConfigError('line ' + str(lineno) + ': expected \'gate = <id> [tau=<real>]\'')
            opts['gates'].append(GateSpec(tokens[0], tau))
        elif key == 'penalty':
            if len(tokens) != 2:
                raise ConfigError('line ' + str(lineno) + ': expected \'penalty = <id> eps=<real>\'')
            eps = parse_rules.scan_option(tokens[1], 'eps', lineno)
            opts['penalties'].append(PenaltySpec(tokens[0], eps))
        else:
            raise ConfigError('line ' + str(lineno) + ': unknown key \'' + key + '\'')
    return opts


def build_spec(opts):
    """ Builds a CostSpec from parsed config entries (missing keys default). """
    kwargs = {key: opts[key] for key in COEFFICIENTS if key in opts}
    if 'measure' in opts:
        kwargs['measure_mode'] = opts['measure']
    return CostSpec(gates=tuple(opts.get('gates', [])),
                    penalties=tuple(opts.get('penalties', [])), **kwargs)


def read_config(optfile):
    """
    Reads a cost configuration file.

    Arguments:
        optfile         full filepath for the config file

    Returns: (CostSpec, opts) where opts lists the entries actually present
    """
    with open(optfile, 'rb') as f:
        data = f.read()
    text = ParseRules('cost').decode(data, optfile)
    try:
        opts = parse_config(text)
        return (build_spec(opts), opts)
    except PySoilError as e:
        raise ConfigError(str(optfile) + ': ' + str(e))


def serialize_config(spec):
    """ Returns config text that read_config() turns back into spec. """
    lines = []
    for key in COEFFICIENTS:
        lines.append('{:<8}= {}'.format(key, getattr(spec, key)))
    lines.append('{:<8}= {}'.format('measure', spec.measure_mode))
    for gate in spec.gates:
        lines.append('{:<8}= {} tau={}'.format('gate', gate.constraint_id, repr(gate.tau)))
    for penalty in spec.penalties:
        lines.append('{:<8}= {} eps={}'.format('penalty', penalty.constraint_id,
                                               repr(penalty.epsilon)))
    return '\n'.join(lines) + '\n'


def create_config(optfile, spec=None):
    """
    Writes the default cost configuration file (or spec, if given).

    Arguments:
        optfile         full filepath for output config file
        spec            CostSpec to write (default: beta = 1, no constraints)
    """
    if spec is None:
        spec = CostSpec()
    with open(optfile, 'w', encoding='utf-8') as optf:
        optf.write('# pysoil cost configuration\n')
        optf.write('# coefficients: const <c> | inv <c> (c/n)\n')
        optf.write('# gate = <constraint-id> [tau=<real>], penalty = <constraint-id> eps=<real>\n')
        optf.write(serialize_config(spec))
