import numpy as np
import pytest

from adr_tours.errors import ConfigError
from adr_tours.guidance.weights import (LAWS, PINNED_SLOTS, DvLawWeights, LegWeights,
                                        QLawWeights, RuggieroWeights, default_weights,
                                        weights_from_vector)


def test_vectors_have_five_slots():
    for law in LAWS:
        weights = weights_from_vector(law, [0.1, 0.2, 0.3, 0.4, 0.5])
        assert weights.to_vector().shape == (5,)


def test_element_weight_laws_ignore_the_fifth_slot():
    vector = RuggieroWeights.from_vector([0.5, 0.0, 1.0, 0.2, 0.9]).to_vector()
    np.testing.assert_allclose(vector, [0.5, 0.0, 1.0, 0.2, 0.0])
    np.testing.assert_allclose(QLawWeights.from_vector([1, 0, 1, 1, 7]).as_array(), [1, 0, 1, 1])


def test_dvlaw_vector_keeps_every_lambda():
    weights = DvLawWeights.from_vector([0.1, 0.2, 0.3, 0.4, 0.5])
    assert weights.lambda_araan == 0.5
    assert weights.lambda_a == 1.0
    np.testing.assert_allclose(weights.to_vector(), [0.1, 0.2, 0.3, 0.4, 0.5])


def test_pinned_slots():
    assert PINNED_SLOTS["ruggiero"] == (1, 4)
    assert PINNED_SLOTS["qlaw"] == (1, 4)
    assert PINNED_SLOTS["dvlaw"] == ()


@pytest.mark.parametrize("build", [
    lambda: RuggieroWeights(w_a=-1.0),
    lambda: RuggieroWeights(thresholds=(0.0, 0.0, 1.0, 0.0)),
    lambda: DvLawWeights(lambda_ai=-0.1),
    lambda: QLawWeights.from_vector([1.0, 0.0, 1.0]),
    lambda: weights_from_vector("bangbang", [0, 0, 0, 0, 0]),
    lambda: default_weights("qlaw", "cost"),
])
def test_invalid_weights(build):
    with pytest.raises(ConfigError):
        build()


def test_leg_weights_by_direction():
    weights = default_weights("dvlaw", "fuel")
    assert weights.for_leg("deorbit") is weights.down
    assert weights.for_leg("handover") is weights.down
    assert weights.for_leg("rendezvous") is weights.up
    rows = weights.table(["deorbit", "rendezvous"])
    assert [n for n, _ in rows] == [1, 2]
    np.testing.assert_allclose(rows[1][1], weights.up.to_vector())


def test_leg_weights_dict():
    weights = default_weights("qlaw", "time")
    loaded = LegWeights.from_dict("qlaw", weights.to_dict())
    assert loaded == weights
    with pytest.raises(ConfigError):
        LegWeights.from_dict("qlaw", {"down": [1, 0, 1, 0, 0]})
