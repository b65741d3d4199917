import os
import logging
from pathlib import Path

from pydantic import BaseModel, Field


logger = logging.getLogger(__name__)

REPO_ROOT = Path(__file__).resolve().parent.parent


class Settings(BaseModel):
    mora_limit: int = Field(default=10_000, gt=0, description="Maximum Mora reduction steps per normal form")
    log_level: str = Field(default="INFO", description="Root logging level for the entry scripts")
    data_dir: Path = Field(default=REPO_ROOT / "data", description="Directory holding bundled profiles and chain pairs")


def load_settings() -> Settings:
    """Build settings from the environment (call ``load_dotenv`` first)."""
    values = {}
    limit = os.getenv("SINGULARITY_MORA_LIMIT")
    if limit:
        try:
            values["mora_limit"] = int(limit)
        except ValueError:
            logger.warning("Ignoring non-integer SINGULARITY_MORA_LIMIT=%r", limit)
    level = os.getenv("SINGULARITY_LOG_LEVEL")
    if level:
        values["log_level"] = level.upper()
    data_dir = os.getenv("SINGULARITY_DATA_DIR")
    if data_dir:
        values["data_dir"] = Path(data_dir)
    return Settings(**values)
