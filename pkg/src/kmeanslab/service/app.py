"""FastAPI wiring around the benchmark executors."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..data import fixture_names
from . import ops
from .schemas import (
    BenchmarkReport,
    BenchmarkRequest,
    ClusterRequest,
    ClusterResponse,
    FixturesResponse,
    InlineDataset,
    StrategiesResponse,
    SyntheticRequest,
)


def create_app() -> FastAPI:
    app = FastAPI(title="kmeanslab", version="0.1.0")

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/strategies", response_model=StrategiesResponse)
    def strategies():
        return StrategiesResponse(strategies=ops.STRATEGY_GRAMMAR)

    @app.get("/fixtures", response_model=FixturesResponse)
    def fixtures():
        return FixturesResponse(fixtures=fixture_names())

    @app.post("/cluster", response_model=ClusterResponse)
    def cluster(request: ClusterRequest):
        try:
            return ops.execute_cluster(request)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @app.post("/benchmark", response_model=BenchmarkReport, response_model_exclude_none=True)
    def benchmark(request: BenchmarkRequest):
        try:
            return ops.execute_benchmark(request)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @app.post("/datasets/synthetic", response_model=InlineDataset)
    def synthetic(request: SyntheticRequest):
        try:
            return ops.execute_synthetic(request)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    return app


app = create_app()


def main() -> None:
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(description="Serve the kmeanslab benchmark API")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    args = parser.parse_args()
    uvicorn.run(app, host=args.host, port=args.port)


if __name__ == "__main__":
    main()
