import os
import tempfile
from pathlib import Path
from typing import Union

from ..exception import ExportError


def atomic_write(path: Union[str, Path], data: Union[str, bytes]):
    """Write to a temporary file in the target directory, then rename over path."""
    path = Path(path)
    payload = data.encode('utf-8') if isinstance(data, str) else data
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(prefix=f'.{path.name}.', suffix='.tmp', dir=path.parent)
        try:
            with os.fdopen(fd, 'wb') as f:
                f.write(payload)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    except OSError as err:
        raise ExportError(f'cannot write {path}: {err.strerror or err}') from err
