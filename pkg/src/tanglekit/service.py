"""HTTP puzzle service.

The app holds an immutable store of puzzles loaded from a directory at
startup; verification is stateless per request, so concurrent requests
need no coordination.  Cross-origin requests are allowed because the game
client is served separately.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException, Response
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from .errors import InvalidDrawingError, MalformedInputError
from .geometry import Point
from .puzzle import Puzzle, SolutionAttempt, decode_puzzle, encode_puzzle, verify_solution


class VertexPosition(BaseModel):
    id: int
    x: int
    y: int


class VerifyRequest(BaseModel):
    positions: list[VertexPosition] = Field(min_length=1)


class VerifyResponse(BaseModel):
    crossings: int
    crossing_free: bool
    shifts_used: int


class PuzzleSummary(BaseModel):
    id: str
    name: str
    n: int
    m: int
    crossings: int
    shift_lower: int
    shift_upper: int


def load_store(puzzle_dir: str | Path) -> dict[str, Puzzle]:
    """Read every *.json puzzle in the directory; ids must be unique."""
    store: dict[str, Puzzle] = {}
    directory = Path(puzzle_dir)
    if not directory.is_dir():
        raise NotADirectoryError(f"puzzle directory not found: {directory}")
    for path in sorted(directory.glob("*.json")):
        try:
            puzzle = decode_puzzle(path.read_bytes())
        except MalformedInputError as exc:
            raise MalformedInputError(f"{path.name}: {exc}") from exc
        if puzzle.id in store:
            raise MalformedInputError(f"{path.name}: duplicate puzzle id {puzzle.id!r}")
        store[puzzle.id] = puzzle
    return store


def create_app(puzzle_dir: str | Path) -> FastAPI:
    store = load_store(puzzle_dir)
    app = FastAPI(title="tanglekit puzzle service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def get_puzzle(puzzle_id: str) -> Puzzle:
        puzzle = store.get(puzzle_id)
        if puzzle is None:
            raise HTTPException(status_code=404, detail=f"unknown puzzle {puzzle_id!r}")
        return puzzle

    @app.get("/api/puzzles", response_model=list[PuzzleSummary])
    def list_puzzles() -> list[PuzzleSummary]:
        return [
            PuzzleSummary(
                id=p.id,
                name=p.id,
                n=p.graph.n,
                m=p.graph.m,
                crossings=p.meta.crossings,
                shift_lower=p.meta.shift_lower,
                shift_upper=p.meta.shift_upper,
            )
            for p in sorted(store.values(), key=lambda p: p.id)
        ]

    @app.get("/api/puzzles/{puzzle_id}")
    def get_puzzle_document(puzzle_id: str) -> Response:
        puzzle = get_puzzle(puzzle_id)
        return Response(content=encode_puzzle(puzzle), media_type="application/json")

    @app.post("/api/puzzles/{puzzle_id}/verify", response_model=VerifyResponse)
    def verify(puzzle_id: str, request: VerifyRequest) -> VerifyResponse:
        puzzle = get_puzzle(puzzle_id)
        positions = {item.id: Point(item.x, item.y) for item in request.positions}
        if len(positions) != len(request.positions):
            raise HTTPException(status_code=422, detail="duplicate vertex id")
        attempt = SolutionAttempt(puzzle_id=puzzle_id, positions=positions)
        try:
            result = verify_solution(puzzle, attempt)
        except (MalformedInputError, InvalidDrawingError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return VerifyResponse(
            crossings=result.crossings,
            crossing_free=result.crossing_free,
            shifts_used=result.shifts_used,
        )

    return app
