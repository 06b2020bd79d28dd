"""HTTP front end wrapping the verification suites.

Run with:  uvicorn weilcanon.service:app
"""

from __future__ import annotations

from typing import List, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .suites import SUITE_NAMES, ConfigError, SuiteConfig, run_suite
from .symplectic import SUPPORTED_PN

app = FastAPI(title="weilcanon", version=__version__)


class RunRequest(BaseModel):
    p: int = 3
    n: int = 1
    suite: str = "all"
    samples: int = Field(default=100, ge=0)
    seed: int = Field(default=0, ge=0, lt=2 ** 64)


class CheckRow(BaseModel):
    suite: str
    check_id: str
    status: str
    detail: str
    witness: Optional[object] = None


class RunResponse(BaseModel):
    ok: bool
    version: str
    config: dict
    checks: List[CheckRow]
    summary: dict


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/suites")
def suites() -> dict:
    return {"suites": list(SUITE_NAMES),
            "supported_pn": sorted(SUPPORTED_PN)}


@app.post("/run", response_model=RunResponse)
def run(request: RunRequest) -> RunResponse:
    try:
        config = SuiteConfig(p=request.p, n=request.n, suite=request.suite,
                             samples=request.samples, seed=request.seed)
    except ConfigError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
    report = run_suite(config)
    data = report.to_dict()
    return RunResponse(ok=report.ok, version=data["version"],
                       config=data["config"],
                       checks=[CheckRow(**row) for row in data["checks"]],
                       summary=data["summary"])
