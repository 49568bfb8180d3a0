"""
Parser Class for pysoil Text Formats

The ParseRules class recognizes skippable lines and extracts the fields of one
record from a graph file, a transaction log or a cost configuration file.

"""


import math
import re

from pysoil.errors import ConfigError, GraphFormatError, LogFormatError

FORMATS = ['graph', 'log', 'cost']


class ParseRules:
    def __init__(self, fmt):
        if fmt not in FORMATS:
            raise ValueError('Unknown format ' + fmt + '. Please choose from:\n\t['
                             + ', '.join(FORMATS) + ']')
        self.fmt = fmt

    def decode(self, data, source):
        """
        Decodes raw file content as UTF-8.

        Arguments:
            data        file content (bytes)
            source      file path, named in the error message

        Returns: text; invalid UTF-8 raises this format's error naming the line
        """
        try:
            return data.decode('utf-8')
        except UnicodeDecodeError as e:
            lineno = data[:e.start].count(b'\n') + 1
            message = (str(source) + ': invalid UTF-8 byte '
                       + hex(data[e.start]))
            if self.fmt == 'graph':
                raise GraphFormatError(lineno, message)
            if self.fmt == 'log':
                raise LogFormatError('line ' + str(lineno) + ': ' + message)
            raise ConfigError('line ' + str(lineno) + ': ' + message)

    def is_skippable(self, line):
        """ Returns TRUE if input line should not be parsed (comment or empty). """
        stripped = line.strip()
        # Log CSV has no comment syntax
        if self.fmt == 'log':
            return stripped == ''
        return (stripped == '') or stripped.startswith('#')

    def scan_graph_record(self, line, lineno):
        """
        Parses a line of text which contains a graph record.

        Example lines: "node 4 2.5", "edge 1 3"

        Returns a tuple of:
            - Record kind ('node' or 'edge')
            - Node ids (one for a node, source and target for an edge)
            - Weight (1.0 when omitted)
        """
        # Split line by spaces and tabs
        lin_split = [x for x in re.split(r'[ \t]+', line.strip()) if x != '']
        kind = lin_split[0]
        if kind == 'node':
            n_ids = 1
        elif kind == 'edge':
            n_ids = 2
        else:
            raise GraphFormatError(lineno, 'unknown record \'' + kind
                                   + '\' (expected node or edge)')
        if len(lin_split) not in (1 + n_ids, 2 + n_ids):
            raise GraphFormatError(lineno, 'expected \'' + kind + ' '
                                   + ' '.join(['<id>'] * n_ids)
                                   + ' [weight]\'')
        ids = tuple(lin_split[1:1 + n_ids])
        weight = 1.0
        if len(lin_split) == 2 + n_ids:
            weight = self.scan_weight(lin_split[-1], lineno)
        return (kind, ids, weight)

    def scan_weight(self, token, lineno):
        """ Converts a weight token, rejecting non-positive or non-finite values. """
        try:
            weight = float(token)
        except ValueError:
            raise GraphFormatError(lineno, 'weight \'' + token
                                   + '\' is not a number')
        if not math.isfinite(weight):
            raise GraphFormatError(lineno, 'weight \'' + token
                                   + '\' is not finite')
        if weight <= 0:
            raise GraphFormatError(lineno, 'non-positive weight ' + token)
        return weight

    def is_log_header(self, fields):
        """ Returns TRUE for the optional 'src,dst[,count]' header row. """
        return [f.strip() for f in fields][:2] == ['src', 'dst']

    def scan_log_record(self, fields, lineno):
        """
        Parses the fields of one transaction log row.

        Example row: ['a', 'b', '3']

        Returns a tuple of (source id, target id, count).
        """
        fields = [f.strip() for f in fields]
        if len(fields) not in (2, 3):
            raise LogFormatError('line ' + str(lineno)
                                 + ': expected \'src,dst[,count]\'')
        src, dst = fields[0], fields[1]
        if src == '' or dst == '' or re.search(r'\s', src + dst):
            raise LogFormatError('line ' + str(lineno)
                                 + ': element ids must be non-empty tokens')
        count = 1
        if len(fields) == 3 and fields[2] != '':
            try:
                count = int(fields[2])
            except ValueError:
                raise LogFormatError('line ' + str(lineno) + ': count \''
                                     + fields[2] + '\' is not an integer')
            if count < 1:
                raise LogFormatError('line ' + str(lineno)
                                     + ': count must be at least 1')
        return (src, dst, count)

    def scan_config_entry(self, line, lineno):
        """
        Parses a line of text which contains a cost configuration entry.

        Example lines: "beta = inv 2", "gate = same-component tau=0.5"

        Returns a tuple of:
            - Key (alpha, beta, gamma, delta, measure, gate, penalty)
            - Value tokens (list of strings)
        """
        if line.find('=') == -1:
            raise ConfigError('line ' + str(lineno) + ': expected \'key = value\'')
        key, value = line.split('=', 1)
        key = key.strip()
        tokens = [x for x in re.split(r'[ \t]+', value.strip()) if x != '']
        if key == '' or len(tokens) == 0:
            raise ConfigError('line ' + str(lineno) + ': expected \'key = value\'')
        return (key, tokens)

    def scan_option(self, token, name, lineno):
        """ Reads 'name=<real>' (e.g. tau=0.5) from a config value token. """
        prefix = name + '='
        if not token.startswith(prefix):
            raise ConfigError('line ' + str(lineno) + ': expected \'' + prefix
                              + '<real>\', got \'' + token + '\'')
        try:
            return float(token[len(prefix):])
        except ValueError:
            raise ConfigError('line ' + str(lineno) + ': \'' + token
                              + '\' is not a number')
