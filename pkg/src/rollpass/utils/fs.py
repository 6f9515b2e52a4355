import contextlib
import os
import pathlib
import shutil
import tempfile

type StrPath = str | os.PathLike[str]


def delete_if_exists(filename: StrPath) -> None:
    with contextlib.suppress(FileNotFoundError):
        os.remove(filename)


def ensure_parent_directory_exists(filename: StrPath) -> None:
    """
    Ensure the directory containing the file exists (create it if necessary).
    """
    pathlib.Path(filename).parent.mkdir(parents=True, exist_ok=True)


def ensure_directory_exists(dirname: StrPath) -> None:
    """
    Ensure the directory exists (create it if necessary).
    """
    pathlib.Path(dirname).mkdir(parents=True, exist_ok=True)


def atomic_write_bytes(filename: StrPath, data: bytes) -> None:
    """
    Write to a sibling temporary file, then rename over the target. Readers never see a partial file.
    """
    path = pathlib.Path(filename)
    ensure_parent_directory_exists(path)
    fd, temp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".partial")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(data)
        os.replace(temp_name, path)
    except BaseException:
        delete_if_exists(temp_name)
        raise


def atomic_write_text(filename: StrPath, text: str) -> None:
    atomic_write_bytes(filename, text.encode("utf-8"))


@contextlib.contextmanager
def atomic_directory(dirname: StrPath):
    """
    Yield a temporary directory next to `dirname`; on clean exit it replaces `dirname` wholesale.
    On error the temporary directory is removed and `dirname` is left untouched.
    """
    target = pathlib.Path(dirname)
    ensure_directory_exists(target.parent)
    staging = pathlib.Path(tempfile.mkdtemp(dir=target.parent, prefix=f".{target.name}.", suffix=".partial"))
    try:
        yield staging
    except BaseException:
        shutil.rmtree(staging, ignore_errors=True)
        raise
    if target.exists():
        shutil.rmtree(target)
    os.replace(staging, target)
