"""
HTTP surface over the core package.

All endpoints are pure request/response; the only shared state is the
per-rank inverse-map index, which the service process caches across
requests.  Domain errors (bad windows, invalid fillings, bounds) come
back as 422 with the reason in detail.
"""
from __future__ import annotations

from fastapi import FastAPI, HTTPException, Query, Response

from .. import tableaux
from ..bruhat import POSET_BOUND, build_weak_order, export_poset
from ..perms import (
    SignedPermutation,
    alignment_count,
    alignment_sets,
    basic_stats,
    crossing_count,
    crossing_set,
    enumerate_group,
    inversion_count,
    parse_cycles,
    parse_window,
)
from ..verify import run_verification
from ..zigzag import (
    classify_zeros,
    format_trace,
    pt_bt_convert,
    zeta,
    zeta_bare,
    zeta_bare_inverse,
    zeta_inverse,
    zigzag_path,
)
from . import schemas


def _parse_perm(payload: schemas.PermInput) -> SignedPermutation:
    if (payload.window is None) == (payload.cycles is None):
        raise ValueError("give exactly one of window or cycles")
    if payload.window is not None:
        return parse_window(payload.window, payload.n)
    return parse_cycles(payload.cycles, payload.n)


def _tableau_from_doc(doc: schemas.TableauDoc) -> tableaux.TableauB:
    return tableaux.from_doc(doc.model_dump())


def _doc_model(t: tableaux.TableauB) -> schemas.TableauDoc:
    return schemas.TableauDoc(**tableaux.to_doc(t))


def _perm_stats(sigma: SignedPermutation) -> schemas.PermStats:
    st = basic_stats(sigma)
    nest, en, ne = alignment_sets(sigma)
    return schemas.PermStats(
        window=str(sigma),
        wex=st.wex,
        drop=st.drop,
        neg=st.neg,
        cyc=st.cyc,
        fwex=st.fwex,
        alignments_nest=nest.sorted_pairs(),
        alignments_en=en.sorted_pairs(),
        alignments_ne=ne.sorted_pairs(),
        crossings=crossing_set(sigma).sorted_pairs(),
        al=alignment_count(sigma),
        crs=crossing_count(sigma),
        inv=inversion_count(sigma),
    )


def create_app() -> FastAPI:
    app = FastAPI(title="signed-tableaux", version="0.1.0")

    @app.get("/health", response_model=schemas.HealthResponse)
    def health():
        return schemas.HealthResponse(status="ok")

    @app.post("/map", response_model=schemas.MapResponse)
    def map_object(req: schemas.MapRequest):
        try:
            if req.direction.startswith("perm-"):
                if req.perm is None:
                    raise ValueError("direction needs a perm input")
                sigma = _parse_perm(req.perm)
                if req.direction == "perm-to-pt":
                    return schemas.MapResponse(tableau=_doc_model(zeta_inverse(sigma)))
                return schemas.MapResponse(tableau=_doc_model(zeta_bare_inverse(sigma)))
            if req.tableau is None:
                raise ValueError("direction needs a tableau input")
            t = _tableau_from_doc(req.tableau)
            if req.direction == "pt-to-perm":
                return schemas.MapResponse(perm=str(zeta(t)))
            if req.direction == "bt-to-perm":
                return schemas.MapResponse(perm=str(zeta_bare(t)))
            expected = "permutation" if req.direction == "pt-to-bt" else "bare"
            if t.kind != expected:
                raise ValueError(f"direction {req.direction} needs a {expected} tableau")
            return schemas.MapResponse(tableau=_doc_model(pt_bt_convert(t)))
        except (ValueError, KeyError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.post("/stats", response_model=schemas.StatsResponse)
    def stats(req: schemas.StatsRequest):
        try:
            if (req.perm is None) == (req.tableau is None):
                raise ValueError("give exactly one of perm or tableau")
            if req.perm is not None:
                sigma = _parse_perm(req.perm)
                try:
                    t = zeta_inverse(sigma)
                except ValueError:
                    t = None
            else:
                t = _tableau_from_doc(req.tableau)
                sigma = zeta(t) if t.kind == "permutation" else zeta_bare(t)
            resp = schemas.StatsResponse(perm_stats=_perm_stats(sigma))
            if t is not None:
                fs = tableaux.filling_stats(t)
                resp.tableau = _doc_model(t)
                resp.tableau_stats = schemas.TableauStats(**fs.__dict__)
                if t.kind == "permutation":
                    resp.zero_types = schemas.ZeroTypeCounts(
                        **classify_zeros(t).counts()
                    )
                if req.trace_from is not None:
                    resp.trace = format_trace(zigzag_path(t, req.trace_from))
            return resp
        except (ValueError, KeyError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(req: schemas.VerifyRequest):
        try:
            report = run_verification(req.theorem, req.n)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return schemas.VerifyResponse(**report.to_dict())

    @app.get("/enumerate", response_model=schemas.EnumerateResponse)
    def enumerate_objects(
        n: int = Query(..., ge=1),
        kind: str = Query("permutation"),
        limit: int | None = Query(None, ge=0),
    ):
        try:
            if kind == "group":
                stream = (
                    {"window": str(sigma)} for sigma in enumerate_group(n)
                )
            else:
                stream = (tableaux.to_doc(t) for t in tableaux.enumerate_tableaux(n, kind))
            items = []
            count = 0
            for doc in stream:
                count += 1
                if limit is None or len(items) < limit:
                    items.append(doc)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        return schemas.EnumerateResponse(
            n=n,
            kind=kind,
            count=count,
            items=items,
            truncated=len(items) < count,
        )

    @app.get("/poset")
    def poset(
        n: int = Query(..., ge=1, le=POSET_BOUND),
        fmt: str = Query("json"),
    ):
        try:
            document = export_poset(build_weak_order(n), fmt)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        media = "application/json" if fmt == "json" else "text/vnd.graphviz"
        return Response(content=document, media_type=media)

    return app


app = create_app()
