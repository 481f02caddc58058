import threading
import time

from pathlib import Path

import pytest

from obatalab.runtime import config, ordered_map, paths


def test_new_run_id_unique():
    run_id1 = config.new_run_id()
    run_id2 = config.new_run_id()
    assert run_id1 != run_id2
    assert run_id1.startswith("run_")
    assert len(run_id1.split("_")[-1]) == 8


def test_make_run_dirs(tmp_path: Path):
    dirs = paths.make_run_dirs(tmp_path, "run_test")
    assert dirs.run_dir == tmp_path / "run_test"
    assert dirs["reports"].exists()
    assert dirs.log_file.name == "obata.log"
    with pytest.raises(KeyError):
        dirs["workers"]
    with pytest.raises(FileExistsError):
        paths.make_run_dirs(tmp_path, "run_test")
    assert paths.make_run_dirs(tmp_path, "run_test", exist_ok=True) == dirs


def test_list_run_ids_skips_foreign_directories(tmp_path: Path):
    assert paths.list_run_ids(tmp_path / "absent") == []
    config.RunSession(tmp_path, "run_b")
    config.RunSession(tmp_path, "run_a")
    (tmp_path / "scratch").mkdir()
    assert paths.list_run_ids(tmp_path) == ["run_a", "run_b"]


def test_ordered_map_preserves_order():
    seen = set()
    lock = threading.Lock()

    def slow_square(value: int) -> int:
        time.sleep(0.01 * (5 - value))
        with lock:
            seen.add(threading.get_ident())
        return value * value

    assert ordered_map(slow_square, range(5), workers=4) == [0, 1, 4, 9, 16]
    assert ordered_map(slow_square, [3], workers=4) == [9]
    assert ordered_map(slow_square, [], workers=None) == []
    assert seen


def test_ordered_map_propagates_errors():
    def fail_on_two(value: int) -> int:
        if value == 2:
            raise ValueError("two")
        return value

    with pytest.raises(ValueError, match="two"):
        ordered_map(fail_on_two, range(4), workers=2)
    with pytest.raises(ValueError, match="two"):
        ordered_map(fail_on_two, range(4), workers=1)
