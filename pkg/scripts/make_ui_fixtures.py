#!/usr/bin/env python3
"""Record scripted play sessions for the browser client's test suite.

Builds a set of puzzles, plays seeded move sequences against the HTTP
service, and stores the server verdict after every move.  The frontend
replays these sessions and must reproduce every crossing count and shift
counter exactly.

Usage: python scripts/make_ui_fixtures.py [OUT_JSON]
"""

from __future__ import annotations

import json
import random
import sys
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from tanglekit.drawing import Drawing, validate_drawing
from tanglekit.geometry import Point
from tanglekit.puzzle import encode_puzzle, run_pipeline
from tanglekit.service import create_app

UI_CAP = 1 << 25

SESSION_SPECS = [
    ("cycle", {"n": 9}, 1, True),
    ("cycle", {"n": 13}, 2, False),
    ("matching", {"m": 6}, 7, True),
    ("matching", {"m": 8}, 3, False),
    ("gs", {"s": 2}, 0, True),
    ("gs", {"s": 3}, 0, False),
    ("starforest", {"k": 3, "s": 3}, 4, True),
    ("bipartite", {"s": 2, "t": 6}, 5, False),
    ("triangulation", {"n": 12}, 6, True),
    ("complete", {"n": 6}, 8, False),
]


def _valid(graph, positions) -> bool:
    return not validate_drawing(Drawing(graph=graph, positions=positions))


def random_move(rng, graph, current, start):
    """A valid single-vertex relocation; occasionally returns to start."""
    xs = [p.x for p in start.values()]
    ys = [p.y for p in start.values()]
    margin = max(10, (max(xs) - min(xs)) // 4, (max(ys) - min(ys)) // 4)
    for _ in range(300):
        v = rng.randrange(graph.n)
        if rng.random() < 0.15 and current[v] != start[v]:
            target = start[v]
        else:
            target = Point(
                rng.randint(min(xs) - margin, max(xs) + margin),
                rng.randint(min(ys) - margin, max(ys) + margin),
            )
        if abs(target.x) > UI_CAP or abs(target.y) > UI_CAP:
            continue
        if target == current[v]:
            continue
        candidate = dict(current)
        candidate[v] = target
        if _valid(graph, candidate):
            return v, target
    return None


def solving_moves(rng, graph, current, layout):
    """Single-vertex moves reaching the layout, every intermediate valid."""
    current = dict(current)
    moves = []
    for _ in range(10 * graph.n):
        displaced = [v for v in sorted(layout) if current[v] != layout[v]]
        if not displaced:
            return moves
        progressed = False
        for v in displaced:
            candidate = dict(current)
            candidate[v] = layout[v]
            if _valid(graph, candidate):
                current[v] = layout[v]
                moves.append((v, layout[v]))
                progressed = True
                break
        if progressed:
            continue
        # Unblock: park one displaced vertex at a random valid spot.
        park = random_move(rng, graph, current, current)
        if park is None:
            return moves
        current[park[0]] = park[1]
        moves.append(park)
    return moves


def main() -> int:
    out_path = Path(sys.argv[1]) if len(sys.argv) > 1 else (
        Path(__file__).resolve().parent.parent
        / "frontend" / "tests" / "fixtures" / "sessions.json"
    )
    rng = random.Random(20240811)

    with tempfile.TemporaryDirectory() as tmp:
        seen = set()
        for family, params, seed, _ in SESSION_SPECS:
            p = run_pipeline(family, params, seed)
            if p.id not in seen:
                seen.add(p.id)
                (Path(tmp) / f"{p.id}.json").write_bytes(encode_puzzle(p))
        client = TestClient(create_app(tmp))

        sessions = []
        for family, params, seed, solve in SESSION_SPECS:
            puzzle = run_pipeline(family, params, seed)
            doc = json.loads(encode_puzzle(puzzle))
            graph = puzzle.graph
            start = dict(puzzle.drawing.positions)
            current = dict(start)

            planned = []
            for _ in range(rng.randint(6, 12)):
                move = random_move(rng, graph, current, start)
                if move is None:
                    break
                planned.append(move)
                current[move[0]] = move[1]
            if solve and graph.reference_layout is not None:
                planned.extend(
                    solving_moves(rng, graph, current, graph.reference_layout)
                )

            current = dict(start)
            moves_out = []
            for v, target in planned:
                current[v] = target
                body = {
                    "positions": [
                        {"id": u, "x": pt.x, "y": pt.y}
                        for u, pt in sorted(current.items())
                    ]
                }
                response = client.post(f"/api/puzzles/{puzzle.id}/verify", json=body)
                assert response.status_code == 200, response.text
                verdict = response.json()
                moves_out.append(
                    {"v": v, "x": target.x, "y": target.y, "server": verdict}
                )
                if verdict["crossing_free"]:
                    break  # the game freezes at the first win
            if solve:
                assert moves_out and moves_out[-1]["server"]["crossing_free"], puzzle.id
            sessions.append({"puzzle": doc, "moves": moves_out})

    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(json.dumps({"sessions": sessions}, indent=2) + "\n")
    total_moves = sum(len(s["moves"]) for s in sessions)
    print(f"wrote {len(sessions)} sessions with {total_moves} moves to {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
