from __future__ import annotations

import json
import logging
from typing import Callable

from sqlalchemy.orm import Session

from app.db.database import SessionLocal
from app.db.models import VerificationRun
from app.verdict import VerificationReport

log = logging.getLogger(__name__)

SessionFactory = Callable[[], Session]


def add_run(report: VerificationReport, model_name: str, model_digest: str | None = None,
            session_factory: SessionFactory = SessionLocal) -> VerificationRun:
    failed = report.failures
    witness = [{"check": c.name, "witness": c.witness} for c in failed]

    session = session_factory()
    try:
        run = VerificationRun(
            theorem=report.theorem,
            model_name=model_name,
            model_digest=model_digest,
            n=report.n,
            ok=report.ok,
            checks=len(report.checks),
            failures=len(failed),
            witness_json=json.dumps(witness, ensure_ascii=False) if witness else None,
        )
        session.add(run)
        session.commit()
        session.refresh(run)
        log.info("recorded %s run #%d for %s (ok=%s)", run.theorem, run.id, model_name, run.ok)
        return run
    finally:
        session.close()


def list_runs(limit: int = 20, theorem: str | None = None,
              session_factory: SessionFactory = SessionLocal) -> list[VerificationRun]:
    session = session_factory()
    try:
        query = session.query(VerificationRun)
        if theorem:
            query = query.filter(VerificationRun.theorem == theorem)
        return query.order_by(VerificationRun.id.desc()).limit(limit).all()
    finally:
        session.close()
