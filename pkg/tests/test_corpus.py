from leibkit.algebra import check_leibniz, is_lie
from leibkit.corpus import MAX_DIM, build_corpus, cross_product
from leibkit.exactla import GF


def test_corpus_is_valid_and_deduplicated(corpus):
    keys = [A.key for _, A in corpus]
    assert len(keys) == len(set(keys))
    names = [n for n, _ in corpus]
    assert len(names) == len(set(names))
    for _, A in corpus:
        assert A.field.is_finite and 1 <= A.dim <= MAX_DIM
        assert check_leibniz(A.sc, A.field) is None


def test_corpus_is_seeded(corpus):
    again = build_corpus()
    assert [(n, A.key) for n, A in again] == [(n, A.key) for n, A in corpus]
    other = build_corpus(seed=8)
    assert [A.key for _, A in other] != [A.key for _, A in corpus]


def test_cross_product_is_lie():
    for p in (2, 3, 5):
        assert is_lie(cross_product(GF(p)))
