"""Content-addressed on-disk cache of incarnated matrices."""

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from src.incarnation import IncarnationParams, LinearMap


class ResultCache:
    """
    Stores matrices as JSON sparse triplets under a blake2b digest of their key.

    Reads tolerate concurrent writers; each write lands in a temporary file that is
    then renamed over the target. Unreadable entries are treated as misses.
    """

    def __init__(self, directory: Path) -> None:
        """
        Args:
            directory: Cache directory, created when missing.
        """
        self.logger: logging.Logger = logging.getLogger(self.__class__.__name__)
        self.directory: Path = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self.hits = 0
        self.misses = 0

    @staticmethod
    def digest(key: Tuple[str, IncarnationParams, str]) -> str:
        text, params, tail = key
        material = json.dumps(
            [text, params.N, params.epsilon, params.D_offset, tail], ensure_ascii=False
        )
        return hashlib.blake2b(material.encode("utf-8"), digest_size=20).hexdigest()

    def path_for(self, key: Tuple[str, IncarnationParams, str]) -> Path:
        return self.directory / f"{self.digest(key)}.json"

    def get(self, key: Tuple[str, IncarnationParams, str]) -> Optional[LinearMap]:
        path = self.path_for(key)
        try:
            with path.open("r", encoding="utf-8") as f:
                data: Dict[str, Any] = json.load(f)
        except FileNotFoundError:
            self.misses += 1
            return None
        except (OSError, json.JSONDecodeError) as e:
            self.logger.warning(f"Ignoring unreadable cache entry {path.name}: {e}")
            self.misses += 1
            return None
        if data.get("key") != key[0]:
            self.logger.warning(f"Digest collision or stale entry in {path.name}")
            self.misses += 1
            return None
        self.hits += 1
        params = key[1]
        result = LinearMap.from_triplets(data["matrix"])
        return result.with_words(params.word(data["domain"]), params.word(data["codomain"]))

    def put(self, key: Tuple[str, IncarnationParams, str], value: LinearMap) -> None:
        path = self.path_for(key)
        if path.exists():
            return
        payload = {
            "key": key[0],
            "N": key[1].N,
            "epsilon": key[1].epsilon,
            "domain": value.domain.letters if value.domain is not None else "",
            "codomain": value.codomain.letters if value.codomain is not None else "",
            "matrix": value.to_triplets(),
        }
        fd, temp_name = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(payload, f, sort_keys=True)
            os.replace(temp_name, path)
            self.logger.debug(f"Cached {path.name}")
        except OSError as e:
            self.logger.warning(f"Could not write cache entry {path.name}: {e}")
            Path(temp_name).unlink(missing_ok=True)
