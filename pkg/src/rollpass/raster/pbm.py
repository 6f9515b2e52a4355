import io
from pathlib import Path

import numpy as np
from PIL import Image

from rollpass.raster.raster import Raster
from rollpass.shared.constants import DEFAULT_RESOLUTION_MM
from rollpass.shared.errors import PbmFormatError
from rollpass.utils.fs import atomic_write_bytes

_MAGIC = b"P4"


def encode_pbm(raster: Raster) -> bytes:
    """Binary PBM: "P4\\n<w> <h>\\n" then rows packed MSB-first, each row padded to a whole byte. 1 = set."""
    # PIL's "1" mode stores black as 0, and PBM writes black as 1
    image = Image.fromarray(~raster.bits)
    buffer = io.BytesIO()
    image.save(buffer, format="PPM")
    return buffer.getvalue()


def decode_pbm(data: bytes, resolution_mm: float = DEFAULT_RESOLUTION_MM) -> Raster:
    """
    Parse a binary PBM. Header comments are accepted, bytes after the raster are ignored. Raises
    PbmFormatError on anything else that is not a well-formed P4 image, including missing raster bytes.
    """
    if not data.startswith(_MAGIC):
        raise PbmFormatError(f"expected magic {_MAGIC!r}, got {data[:2]!r}")
    try:
        with Image.open(io.BytesIO(data), formats=["PPM"]) as image:
            image.load()
            if image.mode != "1":
                raise PbmFormatError(f"expected a bilevel image, got mode {image.mode}")
            bits = ~np.asarray(image, dtype=np.bool_)
    except (OSError, ValueError, SyntaxError) as e:
        raise PbmFormatError(f"malformed PBM: {e}") from e
    return Raster(bits, resolution_mm)


def write_pbm(path: Path, raster: Raster) -> None:
    atomic_write_bytes(path, encode_pbm(raster))


def read_pbm(path: Path, resolution_mm: float = DEFAULT_RESOLUTION_MM) -> Raster:
    return decode_pbm(path.read_bytes(), resolution_mm)
