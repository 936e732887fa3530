import json

import pytest

from tanglekit.errors import InvalidDrawingError, InvalidParameterError, MalformedInputError
from tanglekit.geometry import Point
from tanglekit.puzzle import (
    SolutionAttempt,
    decode_puzzle,
    encode_puzzle,
    parse_solution,
    run_pipeline,
    verify_solution,
)
from tanglekit.untangle import matching_shift_complexity, untangle


@pytest.fixture(scope="module")
def cycle_puzzle():
    return run_pipeline("cycle", {"n": 9}, seed=1)


class TestEncodeDecode:
    def test_round_trip_bytes(self, cycle_puzzle):
        data = encode_puzzle(cycle_puzzle)
        again = encode_puzzle(decode_puzzle(data))
        assert again == data

    def test_decoded_fields(self, cycle_puzzle):
        p = decode_puzzle(encode_puzzle(cycle_puzzle))
        assert p.id == cycle_puzzle.id
        assert p.graph.edges == cycle_puzzle.graph.edges
        assert p.drawing.positions == cycle_puzzle.drawing.positions
        assert p.meta == cycle_puzzle.meta

    def test_truncated_file(self, cycle_puzzle):
        data = encode_puzzle(cycle_puzzle)[:-40]
        with pytest.raises(MalformedInputError):
            decode_puzzle(data)

    def test_coordinate_beyond_cap(self, cycle_puzzle):
        doc = json.loads(encode_puzzle(cycle_puzzle))
        doc["vertices"][0]["x"] = 1 << 41
        with pytest.raises(MalformedInputError, match="cap"):
            decode_puzzle(json.dumps(doc).encode())

    def test_wrong_format_tag(self, cycle_puzzle):
        doc = json.loads(encode_puzzle(cycle_puzzle))
        doc["format"] = "planarity-puzzle/9"
        with pytest.raises(MalformedInputError, match="format"):
            decode_puzzle(json.dumps(doc).encode())

    def test_tampered_crossings_rejected(self, cycle_puzzle):
        doc = json.loads(encode_puzzle(cycle_puzzle))
        doc["meta"]["crossings"] += 1
        with pytest.raises(MalformedInputError, match="crossings"):
            decode_puzzle(json.dumps(doc).encode())

    def test_unsorted_edges_rejected(self, cycle_puzzle):
        doc = json.loads(encode_puzzle(cycle_puzzle))
        doc["edges"][0], doc["edges"][1] = doc["edges"][1], doc["edges"][0]
        with pytest.raises(MalformedInputError, match="sorted"):
            decode_puzzle(json.dumps(doc).encode())

    def test_error_names_first_bad_position(self, cycle_puzzle):
        doc = json.loads(encode_puzzle(cycle_puzzle))
        doc["vertices"][3]["x"] = "oops"
        with pytest.raises(MalformedInputError, match=r"vertices\[3\]"):
            decode_puzzle(json.dumps(doc).encode())


class TestVerifySolution:
    def test_start_positions(self, cycle_puzzle):
        attempt = SolutionAttempt(
            puzzle_id=cycle_puzzle.id, positions=dict(cycle_puzzle.drawing.positions)
        )
        result = verify_solution(cycle_puzzle, attempt)
        assert result.shifts_used == 0
        assert result.crossings == cycle_puzzle.meta.crossings

    def test_reference_layout_solves(self, cycle_puzzle):
        attempt = SolutionAttempt(
            puzzle_id=cycle_puzzle.id,
            positions=dict(cycle_puzzle.graph.reference_layout),
        )
        result = verify_solution(cycle_puzzle, attempt)
        assert result.crossing_free
        assert result.shifts_used <= cycle_puzzle.graph.n

    def test_matching_puzzle_solved_by_shrink(self):
        puzzle = run_pipeline("matching", {"m": 5}, seed=3)
        shrink = untangle(puzzle.drawing, "mis-shrink")
        attempt = SolutionAttempt(
            puzzle_id=puzzle.id, positions=dict(shrink.final.positions)
        )
        result = verify_solution(puzzle, attempt)
        assert result.crossing_free
        assert result.shifts_used == matching_shift_complexity(puzzle.drawing)

    def test_degenerate_attempt_rejected(self, cycle_puzzle):
        positions = dict(cycle_puzzle.drawing.positions)
        positions[0] = positions[1]
        with pytest.raises(InvalidDrawingError):
            verify_solution(
                cycle_puzzle,
                SolutionAttempt(puzzle_id=cycle_puzzle.id, positions=positions),
            )

    def test_partial_coverage_rejected(self, cycle_puzzle):
        positions = dict(cycle_puzzle.drawing.positions)
        del positions[0]
        with pytest.raises(MalformedInputError):
            verify_solution(
                cycle_puzzle,
                SolutionAttempt(puzzle_id=cycle_puzzle.id, positions=positions),
            )

    def test_solution_file_round_trip(self, cycle_puzzle):
        from tanglekit.puzzle import encode_solution

        attempt = SolutionAttempt(
            puzzle_id=cycle_puzzle.id, positions=dict(cycle_puzzle.drawing.positions)
        )
        again = parse_solution(encode_solution(attempt))
        assert again.puzzle_id == attempt.puzzle_id
        assert again.positions == attempt.positions


class TestRunPipeline:
    def test_cycle9_star_drawing(self):
        puzzle = run_pipeline("cycle", {"n": 9}, seed=1)
        assert puzzle.meta.crossings == 27  # n(n-3)/2

    def test_matching6_meets_bound(self):
        puzzle = run_pipeline("matching", {"m": 6}, seed=7)
        assert puzzle.meta.crossings >= 5  # ceil(epsilon/3) = ceil(15/3)

    def test_gs_pipeline_uses_line_drawing(self):
        puzzle = run_pipeline("gs", {"s": 2}, seed=0)
        for i in range(1, 7):
            assert puzzle.drawing.positions[i + 2] == Point(i, 0)

    def test_gs_meta_surfaces_adversarial_bound(self):
        puzzle = run_pipeline("gs", {"s": 6}, seed=0)
        assert puzzle.meta.shift_lower == 2 * 6 - 6

    def test_deterministic_bytes(self):
        a = encode_puzzle(run_pipeline("triangulation", {"n": 12}, seed=5))
        b = encode_puzzle(run_pipeline("triangulation", {"n": 12}, seed=5))
        assert a == b

    def test_meta_invariants(self):
        for family, params in [
            ("cycle", {"n": 8}),
            ("complete", {"n": 6}),
            ("bipartite", {"s": 3, "t": 4}),
            ("starforest", {"k": 3, "s": 3}),
        ]:
            puzzle = run_pipeline(family, params, seed=2)
            assert puzzle.meta.shift_lower <= puzzle.meta.shift_upper
            assert puzzle.meta.crossings <= puzzle.meta.epsilon

    def test_restarts_keep_guarantee_and_determinism(self):
        a = run_pipeline("matching", {"m": 5}, seed=9, restarts=4)
        b = run_pipeline("matching", {"m": 5}, seed=9, restarts=4)
        assert encode_puzzle(a) == encode_puzzle(b)
        assert 3 * a.meta.crossings >= a.meta.epsilon

    def test_unknown_family(self):
        with pytest.raises(InvalidParameterError):
            run_pipeline("moebius", {"n": 5}, seed=0)

    def test_missing_parameter(self):
        with pytest.raises(InvalidParameterError):
            run_pipeline("bipartite", {"s": 3}, seed=0)
