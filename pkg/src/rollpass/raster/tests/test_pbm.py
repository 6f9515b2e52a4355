import io

import pytest
from PIL import Image

from rollpass.raster.config import RasterConfig
from rollpass.raster.pbm import decode_pbm, encode_pbm, read_pbm, write_pbm
from rollpass.raster.raster import Raster
from rollpass.raster.tests.conftest import create_random_raster
from rollpass.shared.errors import PbmFormatError

_SMALL = RasterConfig(width_px=10, height_px=3)
_SMALL_PAYLOAD = bytes([0x80, 0x00, 0x00, 0x40, 0x00, 0x00])


def _create_small() -> Raster:
    return Raster.from_pixels([(0, 0), (1, 9)], _SMALL)


def test_encode_packs_rows_msb_first():
    data = encode_pbm(_create_small())

    assert data == b"P4\n10 3\n" + _SMALL_PAYLOAD


def test_decode_accepts_header_comments():
    data = b"P4\n# drawn by hand\n10 # width\n3\n" + _SMALL_PAYLOAD

    assert decode_pbm(data) == _create_small()


def test_decode_inverts_encode_on_a_full_frame():
    raster = create_random_raster(11)

    assert decode_pbm(encode_pbm(raster)) == raster


@pytest.mark.parametrize(
    "data",
    [
        b"P1\n10 3\n" + _SMALL_PAYLOAD,
        b"P4\n10",
        b"P4\nten 3\n" + _SMALL_PAYLOAD,
        b"P4\n0 3\n",
        b"P4\n10 3\n" + _SMALL_PAYLOAD[:-1],
    ],
)
def test_decode_rejects_malformed_input(data: bytes):
    with pytest.raises(PbmFormatError):
        decode_pbm(data)


def test_decode_ignores_bytes_after_the_raster():
    assert decode_pbm(b"P4\n10 3\n" + _SMALL_PAYLOAD + b"\x00") == _create_small()


def test_decode_reads_images_saved_by_pil():
    image = Image.new("1", (10, 3), color=1)
    image.putpixel((0, 0), 0)
    image.putpixel((9, 1), 0)
    buffer = io.BytesIO()
    image.save(buffer, format="PPM")

    assert decode_pbm(buffer.getvalue()) == _create_small()


def test_write_then_read(tmp_path):
    raster = create_random_raster(12, density=0.5)
    path = tmp_path / "nested" / "x.pbm"

    write_pbm(path, raster)

    assert read_pbm(path) == raster
    assert path.read_bytes().startswith(b"P4\n200 200\n")
