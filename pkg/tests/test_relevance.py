import itertools

import numpy as np
import pytest

from miselect.infotheory import JointTable
from miselect.oracle import Scenario, ScenarioSpec
from miselect.relevance import (
    LabeledJoint,
    RelevanceClass,
    duplicated_features_example,
    grid_scenario_joint,
)

# feature positions in the duplication example: V1..V5 = 0..4
V1, V2, V3, V4, V5 = range(5)


@pytest.fixture(scope="module")
def example():
    return duplicated_features_example()


@pytest.fixture(scope="module")
def grid():
    return grid_scenario_joint(ScenarioSpec(Scenario.UNIFORM, 0.2))


def test_full_set_is_maximally_informative(example):
    assert example.is_maximally_informative(example.features)


def test_duplication_example_maximally_informative_pairs(example):
    assert example.is_maximally_informative((V1, V2))
    assert example.is_maximally_informative((V1, V3))
    assert not example.is_maximally_informative((V1,))
    assert not example.is_maximally_informative((V2, V3))


def test_duplication_example_classification(example):
    assert example.classify_feature(V1) is RelevanceClass.SR
    assert example.classify_feature(V2) is RelevanceClass.WR
    assert example.classify_feature(V3) is RelevanceClass.WR
    assert example.classify_feature(V4) is RelevanceClass.IRRELEVANT
    assert example.classify_feature(V5) is RelevanceClass.IRRELEVANT


def test_duplication_example_optimal_sets(example):
    assert example.relevance_optimal_sets() == [(V1, V2), (V1, V3)]


def test_markov_blankets(example):
    assert example.has_markov_blanket(V3, (V2,))
    assert example.has_markov_blanket(V2, (V3,))
    assert not example.has_markov_blanket(V3, (V4,))
    # a strongly relevant feature has no blanket at all
    others = [f for f in example.features if f != V1]
    for size in range(len(others) + 1):
        for blanket in itertools.combinations(others, size):
            assert not example.has_markov_blanket(V1, blanket)


def test_blanket_filter_keeps_earliest_duplicate(example):
    assert example.markov_blanket_filter() == (V1, V2)


def test_partition_relative_to_chosen_set(example):
    part = example.partition((V1, V2))
    assert part[V1] is RelevanceClass.SR
    assert part[V2] is RelevanceClass.WR_NR
    assert part[V3] is RelevanceClass.WR_R
    assert part[V4] is RelevanceClass.IRRELEVANT
    # the symmetric choice flips the duplicates
    part = example.partition((V1, V3))
    assert part[V2] is RelevanceClass.WR_R
    assert part[V3] is RelevanceClass.WR_NR


def test_grid_scenario_has_the_five_optimal_pairs(grid):
    # feature positions 0..9 are V1..V10
    got = grid.relevance_optimal_sets()
    assert got == [(0, 3), (0, 6), (1, 3), (1, 6), (3, 6)]


def test_grid_scenario_partition(grid):
    classes = {f: grid.classify_feature(f) for f in grid.features}
    assert all(c is not RelevanceClass.SR for c in classes.values())
    assert {f for f, c in classes.items() if c is RelevanceClass.IRRELEVANT} == {
        4, 5, 8, 9
    }
    assert {f for f, c in classes.items() if c is RelevanceClass.WR} == {
        0, 1, 2, 3, 6, 7
    }


def test_sr_in_every_optimal_set_and_irrelevant_in_none(example, grid):
    for joint in (example, grid):
        sets = joint.relevance_optimal_sets()
        union = set().union(*sets) if sets else set()
        inter = set(sets[0]).intersection(*sets[1:]) if sets else set()
        for f in joint.features:
            cls = joint.classify_feature(f)
            if cls is RelevanceClass.SR:
                assert f in inter
            if cls is RelevanceClass.IRRELEVANT:
                assert f not in union
        # consistency the other way: the intersection is exactly the SR set
        assert inter == {
            f for f in joint.features
            if joint.classify_feature(f) is RelevanceClass.SR
        }


def test_filter_output_is_relevance_optimal(example, grid):
    for joint in (example, grid):
        assert joint.markov_blanket_filter() in joint.relevance_optimal_sets()


def test_class_independent_of_features_gives_empty_set():
    # two features, class independent of both
    feat = np.array([0.25, 0.25, 0.25, 0.25]).reshape(2, 2)
    probs = feat[:, :, None] * np.array([0.5, 0.5])[None, None, :]
    joint = LabeledJoint(JointTable(probs))
    assert joint.relevance_optimal_sets() == [()]
    assert all(
        joint.classify_feature(f) is RelevanceClass.IRRELEVANT for f in joint.features
    )


def test_validation():
    table = JointTable(np.full((2, 2), 0.25))
    joint = LabeledJoint(table)
    with pytest.raises(ValueError):
        joint.is_maximally_informative((1,))  # class is not a feature
    with pytest.raises(ValueError):
        joint.has_markov_blanket(0, (0,))
    degenerate = np.zeros((2, 2))
    degenerate[:, 1] = 0.5
    with pytest.raises(ValueError):
        LabeledJoint(JointTable(degenerate))  # single-state class
    with pytest.raises(ValueError):
        big = JointTable(np.full((2,) * 14, 1.0 / 2**14))
        LabeledJoint(big).relevance_optimal_sets()


def test_json_round_trip(example):
    back = LabeledJoint.from_json(example.to_json())
    assert back.class_index == example.class_index
    assert back.relevance_optimal_sets() == example.relevance_optimal_sets()


def test_grid_rejects_boundary_atoms():
    with pytest.raises(ValueError):
        grid_scenario_joint(ScenarioSpec(Scenario.UNIFORM, 0.5), grid=(-0.2, 0.1, -0.1, 0.2))
