"""
Transaction Log Ingestion

Builds element graphs from transaction logs (edge weight = normalized
frequency of the transaction) and generates synthetic logs for testing.

Log CSV: optional 'src,dst,count' header, one 'src,dst[,count]' record per
line, count defaults to 1.

"""

import csv
import io
import re
from collections import Counter
from dataclasses import dataclass
from typing import List

import numpy as np

from pysoil.errors import LogFormatError
from pysoil.graph import Graph
from pysoil.parser import ParseRules

LOG_HEADER = ['src', 'dst', 'count']


@dataclass(frozen=True)
class TransactionRecord:
    source: str
    target: str
    count: int = 1

    def __post_init__(self):
        for element in (self.source, self.target):
            if not element or re.search(r'\s', element):
                raise LogFormatError('transaction element ids must be non-empty tokens, got '
                                     + repr(element))
        if int(self.count) != self.count or self.count < 1:
            raise LogFormatError('transaction count must be a positive integer, got '
                                 + repr(self.count))


def build_from_log(records: List[TransactionRecord]) -> Graph:
    """
    Builds the element graph of a transaction log.

    Each distinct element becomes a unit-weight node; each distinct ordered
    (source, target) pair becomes one edge weighted by its share of the total
    transaction count. Self-transactions become self-loops.

    Returns: Graph whose edge weights sum to 1
    """
    if len(records) == 0:
        raise LogFormatError('transaction log is empty')

    pair_counts = Counter()
    for record in records:
        pair_counts[(record.source, record.target)] += record.count
    total = sum(pair_counts.values())

    # Sorted ids and pairs make the result independent of record order
    elements = sorted({e for pair in pair_counts for e in pair})
    nodes = [(e, 1.0) for e in elements]
    edges = [(src, dst, pair_counts[(src, dst)] / total)
             for (src, dst) in sorted(pair_counts)]
    return Graph(nodes, edges)


def generate_log(node_count: int, transaction_count: int,
                 rng_seed: int) -> List[TransactionRecord]:
    """
    Generates a synthetic transaction log.

    Arguments:
        node_count          number of elements n1..n<node_count> (>= 2)
        transaction_count   number of records (>= 1)
        rng_seed            seed of the numpy random stream

    Returns: records over uniformly random ordered pairs of distinct elements
    """
    if node_count < 2:
        raise LogFormatError('node count must be at least 2, got ' + str(node_count))
    if transaction_count < 1:
        raise LogFormatError('transaction count must be at least 1, got '
                             + str(transaction_count))
    if rng_seed < 0:
        raise LogFormatError('rng seed must be unsigned, got ' + str(rng_seed))

    rng = np.random.default_rng(rng_seed)
    sources = rng.integers(0, node_count, size=transaction_count)
    # A non-zero offset keeps the endpoints distinct and the pair uniform
    offsets = rng.integers(1, node_count, size=transaction_count)
    targets = (sources + offsets) % node_count
    return [TransactionRecord('n' + str(s + 1), 'n' + str(t + 1), 1)
            for s, t in zip(sources.tolist(), targets.tolist())]


def parse_log(text: str) -> List[TransactionRecord]:
    """ Parses log CSV content into transaction records. """
    # Configure the parser
    parse_rules = ParseRules('log')

    records = []
    first = True
    for lineno, line in enumerate(text.splitlines(), start=1):
        if parse_rules.is_skippable(line):
            continue
        fields = next(csv.reader([line]))
        # Header is optional and only allowed on the first record line
        if first and parse_rules.is_log_header(fields):
            first = False
            continue
        first = False
        (src, dst, count) = parse_rules.scan_log_record(fields, lineno)
        records.append(TransactionRecord(src, dst, count))
    return records


def read_log(path) -> List[TransactionRecord]:
    with open(path, 'rb') as f:
        data = f.read()
    return parse_log(ParseRules('log').decode(data, path))


def serialize_log(records: List[TransactionRecord]) -> str:
    """ Returns log CSV content (with header) for the records. """
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(LOG_HEADER)
    for record in records:
        writer.writerow([record.source, record.target, record.count])
    return out.getvalue()


def write_log(records: List[TransactionRecord], path):
    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(serialize_log(records))
