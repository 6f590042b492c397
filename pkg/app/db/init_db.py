from __future__ import annotations

from pathlib import Path

from sqlalchemy.engine import Engine, make_url

from app.db.database import Base, engine
from app.db import models  # noqa: F401  (registers the tables on Base.metadata)


def _ensure_sqlite_dir(bind: Engine) -> None:
    url = make_url(str(bind.url))
    if url.get_backend_name() == "sqlite" and url.database and url.database != ":memory:":
        Path(url.database).parent.mkdir(parents=True, exist_ok=True)


def init_db(bind: Engine | None = None) -> None:
    target = bind or engine
    _ensure_sqlite_dir(target)
    Base.metadata.create_all(bind=target)
