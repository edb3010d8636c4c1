"""HTTP service wrapping the analysis library.

Request bodies are validated by pydantic; domain errors surface as 422
responses with a detail message.
"""

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__
from .analysis import analyze
from .complexity import complexity_profile
from .enumeration import (EnumerationSpec, MAX_ALPHABET, MAX_LENGTH, census,
                          verify_theorems)
from .errors import TrapezeError


class AnalyzeRequest(BaseModel):
    words: list[str] = Field(min_length=1, max_length=512)


class GraphRequest(BaseModel):
    word: str


class RangeRequest(BaseModel):
    alphabet_size: int = Field(ge=1, le=MAX_ALPHABET)
    max_length: int = Field(ge=1, le=MAX_LENGTH)
    canonical: bool = True


class VerifyRequest(RangeRequest):
    jobs: int = Field(default=1, ge=1, le=8)


def create_app() -> FastAPI:
    app = FastAPI(title="trapeze", version=__version__)

    @app.exception_handler(TrapezeError)
    async def domain_error(request, exc):
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/api/analyze")
    def analyze_words(req: AnalyzeRequest):
        return {"records": [analyze(w).to_dict() for w in req.words]}

    @app.post("/api/graph")
    def graph(req: GraphRequest):
        prof = complexity_profile(req.word)
        return {"word": req.word, "profile": list(prof.values)}

    @app.post("/api/census")
    def census_rows(req: RangeRequest):
        spec = EnumerationSpec(req.alphabet_size, req.max_length,
                               canonical=req.canonical)
        rows = census(spec)
        return {"rows": [{
            "length": r.length,
            "total": r.total,
            "gt": r.gt,
            "rich_gt": r.rich_gt,
            "triangular_gt": r.triangular_gt,
            "rk_condition": r.rk_condition,
        } for r in rows]}

    @app.post("/api/verify")
    def verify(req: VerifyRequest):
        spec = EnumerationSpec(req.alphabet_size, req.max_length,
                               canonical=req.canonical)
        return verify_theorems(spec, jobs=req.jobs).to_dict()

    return app


app = create_app()
