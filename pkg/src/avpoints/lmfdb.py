"""Minimal client for the LMFDB isogeny-class collection, with a disk cache.

Offline mode serves the JSON fixtures bundled under avpoints/data/fixtures.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import threading
import time
import urllib.error
import urllib.parse
import urllib.request
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import CacheMiss, NetworkError, ParseError, ValidationError
from .weil import WeilPoly, validate_weil

DEFAULT_CONFIG = {
    "base_url": "https://www.lmfdb.org/api",
    "collection": "av_fq_isog",
    "fields": {"label": "label", "g": "g", "q": "q", "poly": "poly"},
    "page_size": 100,
    "timeout": 30,
    "rate_limit": 1.0,  # seconds between requests
    "attempts": 3,
    "backoff": 1.0,
}

_cache_lock = threading.Lock()
_last_request = [0.0]


def load_config(path=None) -> dict:
    """Defaults overlaid with a JSON file (path or $AVPOINTS_LMFDB_CONFIG)."""
    cfg = json.loads(json.dumps(DEFAULT_CONFIG))
    path = path or os.environ.get("AVPOINTS_LMFDB_CONFIG")
    if path:
        with open(path) as fh:
            user = json.load(fh)
        fields = {**cfg["fields"], **user.pop("fields", {})}
        cfg.update(user)
        cfg["fields"] = fields
    return cfg


@dataclass(frozen=True)
class LmfdbRecord:
    label: str
    g: int
    q: int
    poly: tuple  # ascending coefficients

    def to_weil(self) -> WeilPoly:
        W = validate_weil(self.poly, self.q)
        if W.g != self.g:
            raise ValidationError(f"{self.label}: degree does not match g = {self.g}")
        return W

    def to_dict(self):
        return {"label": self.label, "g": self.g, "q": self.q, "poly": list(self.poly)}


def parse_payload(payload, fields=None) -> list[LmfdbRecord]:
    fields = fields or DEFAULT_CONFIG["fields"]
    if not isinstance(payload, dict) or "data" not in payload:
        raise ParseError("payload has no 'data' list", path="data")
    rows = payload["data"]
    if not isinstance(rows, list):
        raise ParseError("'data' is not a list", path="data")
    out = []
    for i, row in enumerate(rows):
        vals = {}
        for key, name in fields.items():
            if name not in row:
                raise ParseError(f"missing field {name!r}", path=f"data[{i}].{name}")
            vals[key] = row[name]
        try:
            poly = tuple(int(c) for c in vals["poly"])
            rec = LmfdbRecord(str(vals["label"]), int(vals["g"]), int(vals["q"]), poly)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad value: {exc}", path=f"data[{i}]") from exc
        out.append(rec)
    return out


def query_string(cfg: dict, g: int, q: int, offset: int = 0) -> str:
    f = cfg["fields"]
    params = {
        f["g"]: g,
        f["q"]: q,
        "_format": "json",
        "_fields": ",".join(f.values()),
        "_limit": cfg["page_size"],
        "_offset": offset,
    }
    return f"{cfg['base_url']}/{cfg['collection']}/?" + urllib.parse.urlencode(params)


def cache_key(cfg: dict, g: int, q: int, limit) -> str:
    canon = json.dumps([cfg["collection"], cfg["base_url"], g, q, limit], sort_keys=True)
    return hashlib.sha256(canon.encode()).hexdigest()[:24]


def _write_cache(path: Path, payload):
    path.parent.mkdir(parents=True, exist_ok=True)
    with _cache_lock:
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)


def _get_json(url: str, cfg: dict):
    last = None
    for attempt in range(cfg["attempts"]):
        wait = cfg["rate_limit"] - (time.monotonic() - _last_request[0])
        if wait > 0:
            time.sleep(wait)
        _last_request[0] = time.monotonic()
        try:
            with urllib.request.urlopen(url, timeout=cfg["timeout"]) as resp:
                return json.loads(resp.read().decode())
        except (urllib.error.URLError, TimeoutError, OSError) as exc:
            last = exc
            time.sleep(cfg["backoff"] * 2**attempt)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON from {url}: {exc}", path="$") from exc
    raise NetworkError(f"GET {url} failed after {cfg['attempts']} attempts: {last}")


def fixture_dir() -> Path:
    return Path(str(resources.files("avpoints") / "data" / "fixtures"))


def load_fixture(g: int, q: int, directory=None) -> list[LmfdbRecord]:
    d = Path(directory) if directory is not None else fixture_dir()
    path = d / f"av_fq_isog_g{g}_q{q}.json"
    if not path.exists():
        raise CacheMiss(f"no fixture for g={g}, q={q} in {d}")
    return parse_payload(json.loads(path.read_text()))


def fetch(g: int, q: int, limit=None, cache_dir=None, offline: bool = False, config=None, fixtures=None):
    """Records for (g, q): disk cache, then fixtures (offline) or the network."""
    cfg = config or load_config()
    if cache_dir is not None:
        cpath = Path(cache_dir) / f"{cache_key(cfg, g, q, limit)}.json"
        if cpath.exists():
            return parse_payload(json.loads(cpath.read_text()), cfg["fields"])[:limit]
    if offline:
        return load_fixture(g, q, fixtures)[:limit]
    rows, offset = [], 0
    while limit is None or len(rows) < limit:
        payload = _get_json(query_string(cfg, g, q, offset), cfg)
        page = payload.get("data", []) if isinstance(payload, dict) else None
        if page is None:
            raise ParseError("payload has no 'data' list", path="data")
        rows.extend(page)
        if len(page) < cfg["page_size"]:
            break
        offset += len(page)
    payload = {"data": rows[:limit] if limit else rows}
    records = parse_payload(payload, cfg["fields"])
    if cache_dir is not None:
        _write_cache(cpath, payload)
    return records
