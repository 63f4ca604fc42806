# Copyright 2026 The purenash Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import subprocess

import pytest

import purenash

HERE = os.path.dirname(__file__)
DATA = os.path.join(HERE, "..", "cli", "data")


def load(name):
    with open(os.path.join(DATA, name)) as f:
        return json.load(f)


PENNIES = load("matching_pennies.json")
DAG = load("dag_game.json")

TWO_CYCLE = {
    "kind": "digraph",
    "version": "1",
    "vertices": ["a", "b", "c"],
    "arcs": [["a", "b"], ["b", "a"], ["b", "c"]],
}


def test_matching_pennies_has_no_psne():
    assert purenash.solve(PENNIES)["exists"] is False
    assert purenash.brute(PENNIES)["exists"] is False


def test_dag_game_witness_agrees_with_brute_force():
    solved = purenash.solve(DAG)
    assert solved["exists"] is True
    assert solved["backend"] == "greedy"
    assert purenash.brute(DAG)["exists"] is True
    # Player 1 strictly prefers y; players 2 and 3 then copy their inputs.
    assert solved["witness"] == {"1": "y", "2": "x", "3": "x"}


def test_reduce_removes_sink_rounds():
    data = purenash.reduce(TWO_CYCLE)
    assert data["trace"]["removal_rounds"] == [["c"]]
    assert data["trace"]["kept"] == ["a", "b"]


def test_scc_components_in_topological_order():
    comps = purenash.scc(TWO_CYCLE)["components"]
    assert [c["vertices"] for c in comps] == [["a", "b"], ["c"]]
    assert [c["terminal"] for c in comps] == [False, True]


def test_treewidth_of_a_cycle():
    cycle = {
        "kind": "digraph",
        "version": "1",
        "vertices": ["0", "1", "2", "3"],
        "arcs": [["0", "1"], ["1", "2"], ["2", "3"], ["3", "0"]],
    }
    assert purenash.treewidth(cycle)["width"] == 2
    assert purenash.treewidth(cycle, exact=True)["width"] == 2


def test_cycle_game_has_no_psne():
    game = purenash.gadget("cycle_mod_p", "n=3,p=2")
    assert game["kind"] == "chg"
    assert purenash.solve(game)["exists"] is False


def test_random_hom_instance_backends_agree():
    for seed in range(10):
        inst = purenash.random_fixture("hom_instance", seed=seed, n=4, m=3)
        dp = purenash.hom(inst, backend="dp")
        bf = purenash.hom(inst, backend="brute")
        assert dp["exists"] == bf["exists"]


def test_gadget_tracks_homomorphism():
    for seed in range(5):
        inst = purenash.random_fixture("hom_instance", seed=seed, n=3, m=2)
        game = purenash.gadget("direct_xy", instance=inst)
        assert purenash.solve(game)["exists"] == purenash.hom(inst)["exists"]


def test_canonicalize_is_a_fixpoint():
    text = purenash.canonicalize(DAG)
    assert purenash.canonicalize(text) == text
    assert json.loads(text)["utilities"]["1"] == [0, "3/2"]


def test_example15_size():
    graph = purenash.example15(2)
    assert len(graph["vertices"]) == 2 * 2 * 2 + 2 * 2


def test_errors_map_to_exceptions():
    with pytest.raises(purenash.DocumentError):
        purenash.solve("{ not json")
    with pytest.raises(purenash.UsageError):
        purenash.solve(TWO_CYCLE)
    with pytest.raises(purenash.CapExceededError):
        purenash.brute(PENNIES, cap=1)
    assert issubclass(purenash.DocumentError, purenash.PurenashError)


def test_cli_matches_module():
    cli = os.environ.get("PURENASH_CLI")
    if not cli:
        pytest.skip("PURENASH_CLI not set")
    out = subprocess.run([cli, "solve", "--witness", "-"], input=json.dumps(DAG),
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out)["data"] == purenash.solve(DAG)
