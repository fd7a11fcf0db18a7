import pytest

import oracles
from phisigma.chains import (
    ChainSet,
    chain_growth_diagnostic,
    chain_membership_oracle,
    exceptional_set,
    forbidden_set,
    prime_chain_set,
    smooth_count,
    smooth_shifted_count,
    unrestricted_iterate_test,
    verify_chain_set,
)
from phisigma.errors import DomainError
from phisigma.primes import primes_up_to


def test_chain_set_spot_values():
    cs = prime_chain_set(31, 3)
    assert cs.members == (3, 7, 13, 19, 29, 31)
    assert verify_chain_set(cs)
    assert 13 in cs and 11 not in cs
    assert cs.witness[3] == (3,)
    # every stored witness walks q -> t through the congruence steps
    for t, chain in cs.witness.items():
        assert chain[0] == 3 and chain[-1] == t


def test_chain_set_root_two_reaches_every_prime():
    # from 2 one step reaches any odd prime, so T(y, 2) is all primes <= y
    for y in (10, 100, 500):
        cs = prime_chain_set(y, 2)
        assert cs.members == tuple(int(p) for p in primes_up_to(y))
        assert verify_chain_set(cs)


def test_chain_set_matches_recursive_oracle():
    for q in (3, 5, 7, 11, 13):
        for y in (50, 200, 1000):
            cs = prime_chain_set(y, q)
            memo = {}
            for t in (int(v) for v in primes_up_to(y)):
                assert (t in cs) == oracles.chain_member(t, q, y, memo), (t, q, y)


def test_chain_set_root_above_bound_is_empty():
    cs = prime_chain_set(5, 11)
    assert cs.members == ()
    assert verify_chain_set(cs)


def test_chain_set_rejects_bad_arguments():
    with pytest.raises(DomainError):
        prime_chain_set(100, 9)
    with pytest.raises(DomainError):
        prime_chain_set(0, 3)


def test_chain_set_json_shape():
    d = prime_chain_set(31, 3).to_json_dict()
    assert d["y"] == 31 and d["q"] == 3
    assert d["members"] == [3, 7, 13, 19, 29, 31]
    assert d["witnesses"]["31"][-1] == 31


def test_membership_oracle():
    assert chain_membership_oracle(31, 3, 31)
    assert not chain_membership_oracle(11, 3, 31)
    with pytest.raises(DomainError):
        chain_membership_oracle(9, 3, 31)
    with pytest.raises(DomainError):
        chain_membership_oracle(37, 3, 31)


def test_unrestricted_iterate():
    # phi-iterates of 7: 6, 2, 1 -- meets 3 but never 5
    assert unrestricted_iterate_test(7, 3)
    assert not unrestricted_iterate_test(5, 3)
    assert unrestricted_iterate_test(5, 2)
    assert unrestricted_iterate_test(3, 3)


def test_chain_membership_implies_unrestricted():
    # a y-restricted chain is in particular an unrestricted one
    for q in (3, 5, 7):
        cs = prime_chain_set(500, q)
        for t in cs.members:
            assert unrestricted_iterate_test(t, q), (t, q)


def test_growth_diagnostic():
    d = chain_growth_diagnostic(10000, 101, 0.5)
    assert d["count"] == 18
    assert d["ratio"] == pytest.approx(18 / (10000 / 101) ** 1.5)
    with pytest.raises(DomainError):
        chain_growth_diagnostic(100, 101, 0.5)
    with pytest.raises(DomainError):
        chain_growth_diagnostic(10000, 101, 0.0)


def test_forbidden_set():
    assert forbidden_set(31, [3, 5]) == (3, 5, 7, 11, 13, 19, 23, 29, 31)
    assert forbidden_set(31, []) == ()
    with pytest.raises(DomainError):
        forbidden_set(31, [4])


def test_forbidden_set_is_union_of_chain_sets():
    y = 200
    union = set(prime_chain_set(y, 3).members) | set(prime_chain_set(y, 5).members)
    assert forbidden_set(y, [3, 5]) == tuple(sorted(union))


def brute_smooth_shifted(x, smooth_bound, q, a):
    count = 0
    for p in range(2, x + 1):
        if not oracles.trial_is_prime(p):
            continue
        shifted = p + a
        if shifted < 1 or shifted % q != 0:
            continue
        if max(oracles.trial_factor(shifted), default=1) <= smooth_bound:
            count += 1
    return count


def test_smooth_shifted_count_spot_values():
    assert smooth_shifted_count(100, 10, 2, 1) == 19
    assert smooth_shifted_count(100, 10, 3, 1) == 13
    assert smooth_shifted_count(100, 10, 2, -1) == 16
    assert smooth_shifted_count(100, 10, 3, -1) == 9


def test_smooth_shifted_count_matches_brute_force():
    for q in (2, 3, 5, 7):
        for a in (1, -1):
            for x in (50, 100, 300):
                assert smooth_shifted_count(x, 10, q, a) == \
                    brute_smooth_shifted(x, 10, q, a), (x, q, a)


def test_smooth_count():
    assert smooth_count(1000, 5) == 86
    for x in (1, 10, 100, 500):
        for bound in (2, 3, 5, 11):
            assert smooth_count(x, bound) == oracles.smooth_count_brute(x, bound)


def test_exceptional_set_thresholds():
    assert exceptional_set(100, 5, 10, 0.1) == ()
    assert exceptional_set(100, 5, 10, 10.0) == (2, 3, 5)


def test_exceptional_set_domain_errors():
    with pytest.raises(DomainError):
        exceptional_set(2, 2, 10, 0.5)
    with pytest.raises(DomainError):
        exceptional_set(100, 200, 10, 0.5)
    with pytest.raises(DomainError):
        exceptional_set(100, 5, 10, -1.0)
