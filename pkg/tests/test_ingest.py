import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pysoil.errors import LogFormatError
from pysoil.ingest import (TransactionRecord, build_from_log, generate_log,
                           parse_log, read_log, serialize_log, write_log)


def test_build_from_log_counts_frequencies():
    records = [TransactionRecord('b', 'a'), TransactionRecord('a', 'b', 2),
               TransactionRecord('b', 'a')]
    g = build_from_log(records)
    assert g.node_ids == ('a', 'b')
    assert g.node_weight('a') == 1.0
    assert g.edges() == [('a', 'b', 0.5), ('b', 'a', 0.5)]


def test_build_from_log_keeps_self_transactions():
    g = build_from_log([TransactionRecord('x', 'x', 3), TransactionRecord('x', 'y')])
    assert g.edge_weight('x', 'x') == 0.75
    assert g.edge_weight('x', 'y') == 0.25


def test_build_from_log_ignores_record_order():
    records = generate_log(6, 200, 3)
    assert build_from_log(records) == build_from_log(list(reversed(records)))


def test_empty_log_is_rejected():
    with pytest.raises(LogFormatError):
        build_from_log([])
    with pytest.raises(LogFormatError):
        build_from_log(parse_log('src,dst,count\n'))


def test_parse_log_header_and_default_count():
    records = parse_log('src,dst,count\na,b,4\nb,c\n\nc,a,\n')
    assert records == [TransactionRecord('a', 'b', 4), TransactionRecord('b', 'c', 1),
                       TransactionRecord('c', 'a', 1)]


def test_parse_log_without_header():
    assert parse_log('a,b\n') == [TransactionRecord('a', 'b', 1)]


@pytest.mark.parametrize('text', [
    'a\n',
    'a,b,c,d\n',
    'a,,1\n',
    'a,b,zero\n',
    'a,b,0\n',
    'a b,c\n',
])
def test_parse_log_rejects_malformed_rows(text):
    with pytest.raises(LogFormatError):
        parse_log(text)


def test_transaction_record_validation():
    with pytest.raises(LogFormatError):
        TransactionRecord('', 'b')
    with pytest.raises(LogFormatError):
        TransactionRecord('a', 'b', 0)


def test_generate_log_is_seeded():
    assert generate_log(10, 100, 5) == generate_log(10, 100, 5)
    assert generate_log(10, 100, 5) != generate_log(10, 100, 6)


def test_generate_log_pairs_are_distinct_known_elements():
    records = generate_log(4, 500, 1)
    assert len(records) == 500
    names = {'n1', 'n2', 'n3', 'n4'}
    for record in records:
        assert record.source in names and record.target in names
        assert record.source != record.target
        assert record.count == 1
    g = build_from_log(records)
    assert abs(sum(w for _, _, w in g.edges()) - 1.0) < 1e-12


@pytest.mark.parametrize('nodes, transactions, seed', [(1, 10, 0), (5, 0, 0), (5, 10, -1)])
def test_generate_log_validation(nodes, transactions, seed):
    with pytest.raises(LogFormatError):
        generate_log(nodes, transactions, seed)


def test_log_file_round_trip(tmp_path):
    records = generate_log(5, 50, 9)
    path = tmp_path / 'log.csv'
    write_log(records, path)
    assert read_log(path) == records
    assert serialize_log(records).startswith('src,dst,count\n')


def test_transaction_ids_must_be_tokens():
    with pytest.raises(LogFormatError):
        TransactionRecord('a b', 'c')


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=2, max_value=30), st.integers(min_value=1, max_value=500),
       st.integers(min_value=0, max_value=2 ** 32))
def test_generated_log_weights_sum_to_one(node_count, transaction_count, seed):
    g = build_from_log(generate_log(node_count, transaction_count, seed))
    assert abs(sum(w for _, _, w in g.edges()) - 1.0) <= 1e-12
    assert g.N <= node_count
