"""FastAPI service exposing enumeration and classification over HTTP."""
import logging
from typing import List, Optional

from fastapi import Depends, FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from config.settings import settings
from core.errors import AnticanonError
from cycle.enumerate import enumerate_plans
from models.plan import BlowupPlan
from models.report import ClassificationReport
from orchestrator.golden import diff, load_golden
from orchestrator.pipeline import RunOptions, run_plans
from orchestrator.render import summary_rows

logging.basicConfig(level=settings.log_level.upper())

app = FastAPI(
    title="anticanon",
    description="Exact linear systems on blowups of CP1 x CP1 along an anticanonical cycle",
    version="0.1.0",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["GET", "POST"],
    allow_headers=["*"],
)


# Request/Response models
class ClassifyRequest(BaseModel):
    plans: List[BlowupPlan]
    seeds: Optional[List[int]] = None
    samples: Optional[int] = None
    images: bool = True


class EnumeratedPlanOut(BaseModel):
    plan: BlowupPlan
    canonical_string: List[int]
    k: int
    kinds: List[int]
    pattern: str
    collision: bool = False


class TableOut(BaseModel):
    rows: List[dict]
    mismatches: List[str]


def get_options() -> RunOptions:
    """Run options from settings (created per request)."""
    return RunOptions()


@app.get("/api/health")
async def health():
    """Health check endpoint."""
    return {"status": "ok", "version": "0.1.0"}


@app.get("/api/enumerate", response_model=List[EnumeratedPlanOut])
def enumerate_endpoint(nodes_only: bool = False):
    """Plans up to symmetry."""
    return [
        EnumeratedPlanOut(plan=e.plan, canonical_string=list(e.canonical_string), k=e.k,
                          kinds=list(e.kinds), pattern=e.pattern_text(), collision=e.collision)
        for e in enumerate_plans(nodes_only=nodes_only)
    ]


@app.post("/api/classify", response_model=List[ClassificationReport])
def classify_endpoint(request: ClassifyRequest, options: RunOptions = Depends(get_options)):
    """Classify the posted plans."""
    if not request.plans:
        raise HTTPException(status_code=400, detail="No plans given")
    if request.seeds is not None:
        if not request.seeds:
            raise HTTPException(status_code=400, detail="Empty seed list")
        options.seeds = request.seeds
    if request.samples is not None:
        options.samples = request.samples
    options.images = request.images
    return run_plans(request.plans, options)


@app.get("/api/table", response_model=TableOut)
def table_endpoint(options: RunOptions = Depends(get_options)):
    """The consolidated classification table with golden-file mismatches."""
    try:
        golden = load_golden()
    except (OSError, AnticanonError) as e:
        raise HTTPException(status_code=500, detail=f"Golden table unavailable: {e}")
    reports = run_plans([e.plan for e in enumerate_plans()], options)
    return TableOut(rows=summary_rows(reports), mismatches=diff(reports, golden, require_all=True))


if __name__ == "__main__":
    import uvicorn
    
    uvicorn.run(app, host="0.0.0.0", port=8000, log_level=settings.log_level.lower())
