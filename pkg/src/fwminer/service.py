"""Read-only HTTP search service over a built index.

Endpoints (JSON, UTF-8):

    GET /api/search?q=&domain=&category=&rank=&limit=&offset=
    GET /api/domains
    GET /api/stats
    GET /api/health

Errors return ``{"error": <message>}`` with status 400 (bad parameters)
or 503 (no index loaded).
"""

from __future__ import annotations

from dataclasses import dataclass

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .analysis import build_stats_payload, corpus_stats
from .index import Index, IndexError_, Query, parse_category, search


@dataclass(frozen=True)
class ServiceConfig:
    index_path: str = ""
    host: str = "127.0.0.1"
    port: int = 8080
    cors_origin: str | None = None
    page_limit_max: int = 100

    def __post_init__(self) -> None:
        if not 1 <= self.port <= 65535:
            raise ValueError("port must be in [1, 65535]")
        if self.page_limit_max < 1:
            raise ValueError("page_limit_max must be >= 1")


class NoIndexError(RuntimeError):
    pass


def create_app(index: Index | None, config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    app = FastAPI(title="fwminer search service", docs_url=None, redoc_url=None)

    if config.cors_origin:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=[config.cors_origin],
            allow_methods=["GET"],
            allow_headers=["*"],
        )

    @app.exception_handler(IndexError_)
    async def _bad_query(_request: Request, exc: IndexError_):
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(RequestValidationError)
    async def _bad_params(_request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc.errors())})

    def require_index() -> Index:
        if index is None:
            raise NoIndexError("no index loaded")
        return index

    @app.exception_handler(NoIndexError)
    async def _no_index(_request: Request, exc: NoIndexError):
        return JSONResponse(status_code=503, content={"error": str(exc)})

    @app.get("/api/health")
    async def health():
        return {
            "status": "ok" if index is not None else "no index",
            "records": index.size if index is not None else 0,
        }

    @app.get("/api/search")
    async def api_search(
        q: str = "",
        domain: str | None = None,
        category: str | None = None,
        rank: str = "pagerank",
        limit: int = 10,
        offset: int = 0,
    ):
        idx = require_index()
        query = Query(
            text=q,
            domain=domain,
            category=parse_category(category) if category else None,
            rank=rank,
            limit=min(max(limit, 1), config.page_limit_max),
            offset=offset,
        )
        total, page = search(idx, query)
        return {
            "total": total,
            "results": [
                {
                    "sentence": rec.text,
                    "category": rec.final_category.value,
                    "confidence": rec.confidence,
                    "score": score,
                    "paper": {
                        "id": rec.doc_id,
                        "title": rec.title,
                        "year": rec.year,
                        "venue": rec.venue,
                        "citation_count": rec.citation_count,
                    },
                }
                for rec, score in page
            ],
        }

    @app.get("/api/domains")
    async def api_domains():
        idx = require_index()
        records = list(idx.records.values())
        return [
            {
                "name": s.domain,
                "paper_count": s.paper_count,
                "sentence_count": s.sentence_count,
            }
            for s in corpus_stats(records)
        ]

    @app.get("/api/stats")
    async def api_stats():
        idx = require_index()
        return build_stats_payload([idx.records[i] for i in sorted(idx.records)])

    return app
