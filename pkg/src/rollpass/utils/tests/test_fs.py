from pathlib import Path

import pytest

from rollpass.utils.fs import atomic_directory, atomic_write_bytes, atomic_write_text


def test_atomic_write_creates_parents_and_leaves_no_partials(tmp_path: Path):
    path = tmp_path / "a" / "b" / "file.bin"

    atomic_write_bytes(path, b"\x00\x01")
    atomic_write_text(path, "replaced")

    assert path.read_text() == "replaced"
    assert [p.name for p in path.parent.iterdir()] == ["file.bin"]


def test_atomic_directory_replaces_the_target(tmp_path: Path):
    target = tmp_path / "samples"
    (target / "old").mkdir(parents=True)

    with atomic_directory(target) as staging:
        (staging / "new").write_text("x")

    assert [p.name for p in target.iterdir()] == ["new"]
    assert [p.name for p in tmp_path.iterdir()] == ["samples"]


def test_atomic_directory_keeps_the_target_on_error(tmp_path: Path):
    target = tmp_path / "samples"
    (target / "old").mkdir(parents=True)

    with pytest.raises(RuntimeError), atomic_directory(target) as staging:
        (staging / "new").write_text("x")
        raise RuntimeError("interrupted")

    assert [p.name for p in target.iterdir()] == ["old"]
    assert [p.name for p in tmp_path.iterdir()] == ["samples"]
