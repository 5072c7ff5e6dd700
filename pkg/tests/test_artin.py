import pytest
from hypothesis import given

from braidhurwitz.artin import (
    act,
    act_letter,
    braids_equal,
    canonical_key,
    compose_images,
    identity_image,
    induced_permutation,
    serialize_image,
)
from braidhurwitz.braid import BraidError, BraidWord, compose, inverse, parse_word

from conftest import braid_words


def w(text, n=3):
    return parse_word(text, n)


def test_act_letter_examples():
    assert act_letter(1, (1,), 3) == (1, 2, -1)
    assert act_letter(1, (3,), 3) == (3,)
    # sigma_1^-1 sends x1 -> x2, x2 -> x2^-1 x1 x2; by hand: x2 . x2^-1 x1 x2 . x2^-1 = x1
    assert act_letter(-1, (1, 2, -1), 3) == (1,)


def test_act_examples():
    assert act(w(""), (2, -1, 3)) == (2, -1, 3)
    assert act(w("1 -1"), (2,)) == (2,)
    for i in (1, 2, 3):
        assert act(w("1 2 1"), (i,)) == act(w("2 1 2"), (i,))


def test_canonical_key_examples():
    assert canonical_key(w("")) == ((1,), (2,), (3,))
    assert canonical_key(w("1")) == ((1, 2, -1), (1,), (3,))
    assert canonical_key(w("1 2 1 2 1 2")) == canonical_key(w("2 1 2 1 2 1"))


def test_braids_equal_examples():
    assert braids_equal(w("1 2 1"), w("2 1 2"))
    assert braids_equal(w("1 3", 4), w("3 1", 4))
    assert not braids_equal(w("1"), w("2"))
    # keys differ already on x1: x1 x2 x1^-1 versus x1
    assert canonical_key(w("1"))[0] != canonical_key(w("2"))[0]
    with pytest.raises(BraidError):
        braids_equal(w("1"), w("1", 4))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_relations_hold(n):
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                assert braids_equal(BraidWord(n, (i, j)), BraidWord(n, (j, i)))
            if abs(i - j) == 1:
                assert braids_equal(BraidWord(n, (i, j, i)), BraidWord(n, (j, i, j)))
                assert not braids_equal(BraidWord(n, (i, j)), BraidWord(n, (j, i)))


@given(braid_words(4, 12))
def test_images_are_conjugates_and_permute(a):
    perm = induced_permutation(canonical_key(a))
    assert sorted(perm) == [1, 2, 3, 4]


@given(braid_words(4, 12))
def test_boundary_word_fixed(a):
    assert act(a, (1, 2, 3, 4)) == (1, 2, 3, 4)


@given(braid_words(3, 8), braid_words(3, 8), braid_words(3, 6).map(lambda b: b.letters))
def test_composition_order(a, b, fw):
    fw = fw + (3, -1)
    assert act(compose(a, b), fw) == act(b, act(a, fw))


@given(braid_words(4, 8), braid_words(4, 8))
def test_compose_images_matches_words(a, b):
    assert compose_images(canonical_key(a), canonical_key(b)) == canonical_key(compose(a, b))


@given(braid_words(4, 10))
def test_inverse_word_gives_identity(a):
    assert canonical_key(compose(a, inverse(a))) == identity_image(4)
    assert compose_images(canonical_key(a), canonical_key(inverse(a))) == identity_image(4)


def test_serialized_form_is_stable():
    assert serialize_image(canonical_key(w("1"))) == "1 2 -1|1|3"
