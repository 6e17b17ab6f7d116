import logging

import pytest

from ghcodes.cli import main
from ghcodes.container import decompress, inspect_header

from conftest import read_golden


@pytest.fixture(autouse=True)
def restore_root_handlers():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    for handler in root.handlers:
        if handler not in handlers:
            handler.close()
    root.handlers[:] = handlers
    root.setLevel(level)


def run(capsys, *argv) -> tuple[int, list[str]]:
    code = main(list(argv))
    return code, capsys.readouterr().out.splitlines()


class TestTable:
    def test_standard_golden(self, capsys):
        code, lines = run(capsys, "table", "--golden", "--max", "15")
        assert code == 0
        assert lines == read_golden("table1_std.txt")

    @pytest.mark.parametrize("a", [-2, -3, -4, -5])
    def test_variant_golden(self, capsys, a):
        code, lines = run(capsys, "table", "--golden", "--seq", f"a={a}", "--max", "15")
        assert code == 0
        assert lines == read_golden(f"table2_a{a}.txt")

    def test_title_line(self, capsys):
        _, lines = run(capsys, "table", "--max", "3")
        assert lines == ["# G-H code over (1, 2), n = 1..3", "1: 11", "2: 011", "3: 0011"]

    def test_range_cap(self, capsys):
        code, lines = run(capsys, "table", "--max", "50", "--max-range", "20")
        assert code == 1
        assert lines == []


class TestSingleValues:
    def test_encode(self, capsys):
        assert run(capsys, "encode", "10") == (0, ["010011"])

    def test_encode_greedy(self, capsys):
        assert run(capsys, "encode", "10", "--policy", "greedy") == (0, ["010011"])

    def test_encode_variant(self, capsys):
        assert run(capsys, "encode", "3", "--seq", "a=-2") == (0, ["011"])

    def test_encode_not_encodable(self, capsys):
        code, lines = run(capsys, "encode", "5", "--seq", "a=-5")
        assert code == 2
        assert lines == []

    def test_encode_over_bit_cap(self, capsys):
        assert run(capsys, "encode", "10000", "--bits", "8")[0] == 2

    def test_bit_cap_counts_actual_codewords(self, capsys):
        assert run(capsys, "encode", "3", "--seq", "a=-2", "--bits", "3") == (0, ["011"])
        assert run(capsys, "encode", "40", "--policy", "greedy", "--bits", "8")[0] == 2
        assert run(capsys, "encode", "33", "--policy", "greedy", "--bits", "8") == (0, ["10101011"])

    def test_greedy_needs_standard(self, capsys):
        assert run(capsys, "encode", "3", "--seq", "a=-2", "--policy", "greedy")[0] == 1

    def test_decode(self, capsys):
        assert run(capsys, "decode", "1011") == (0, ["4 (4 bits)"])
        assert run(capsys, "decode", "100011", "--seq", "a=-2") == (0, ["3 (6 bits)"])

    def test_decode_non_positive(self, capsys):
        assert main(["decode", "11", "--seq", "a=-2"]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "non-positive value -2" in captured.err

    def test_decode_incomplete(self, capsys):
        assert run(capsys, "decode", "0101")[0] == 2

    def test_bad_selector(self, capsys):
        assert run(capsys, "encode", "3", "--seq", "fib")[0] == 1


class TestSweeps:
    def test_scan(self, capsys):
        assert run(capsys, "scan", "--seq", "a=-5", "--max", "15") == (0, ["5, 12"])

    def test_scan_csv(self, capsys):
        assert run(capsys, "scan", "--seq", "a=-5", "--max", "15", "--csv") == (0, ["n", "5", "12"])

    def test_scan_complete(self, capsys):
        assert run(capsys, "scan", "--max", "100") == (0, ["none"])

    def test_profile(self, capsys):
        assert run(capsys, "profile", "--max", "100") == (0, ["count=1: 100"])

    def test_profile_csv(self, capsys):
        code, lines = run(capsys, "profile", "--seq", "a=-5", "--max", "15", "--csv")
        assert code == 0
        assert lines[0] == "count,integers"
        assert lines[1] == "0,2"

    def test_profile_with_workers(self, capsys):
        assert run(capsys, "profile", "--max", "300", "--workers", "2") == (0, ["count=1: 300"])

    def test_lengths(self, capsys):
        code, lines = run(capsys, "lengths", "--seq", "a=-4", "--max", "11")
        assert code == 0
        assert lines[-2:] == ["10: 7", "11: 5"]

    def test_lengths_csv(self, capsys):
        _, lines = run(capsys, "lengths", "--seq", "a=-4", "--max", "11", "--csv")
        assert lines[0] == "n,length,inversion"
        assert lines[-2:] == ["10,7,1", "11,5,0"]

    def test_lengths_not_available(self, capsys):
        _, lines = run(capsys, "lengths", "--seq", "a=-5", "--max", "5")
        assert lines[-1] == "5: N/A"

    def test_lengths_bit_cap(self, capsys):
        _, lines = run(capsys, "lengths", "--seq", "a=-4", "--max", "11", "--bits", "5")
        assert lines[-2:] == ["10: N/A", "11: 5"]

    def test_missing_max(self):
        with pytest.raises(SystemExit) as info:
            main(["scan"])
        assert info.value.code == 1

    def test_family(self, capsys):
        code, lines = run(capsys, "family", "--max", "15", "--range=-6:-2")
        assert code == 0
        feasible = lines[0].split(", ")
        assert {"-4", "-3", "-2"} <= set(feasible)
        assert "-5" not in feasible

    def test_family_bad_range(self):
        with pytest.raises(SystemExit) as info:
            main(["family", "--max", "15", "--range", "3"])
        assert info.value.code == 1


class TestFiles:
    def compress_file(self, capsys, tmp_path, data: bytes, *flags) -> tuple[int, bytes]:
        source, packed = tmp_path / "in.bin", tmp_path / "out.ghc"
        source.write_bytes(data)
        code, _ = run(capsys, "compress", "-i", str(source), "-o", str(packed), *flags)
        return code, packed.read_bytes() if packed.exists() else b""

    def test_round_trip(self, capsys, tmp_path):
        data = b"she sells sea shells by the sea shore\n" * 50
        code, packed = self.compress_file(capsys, tmp_path, data, "--seq", "a=-3")
        assert code == 0
        assert decompress(packed) == data
        restored = tmp_path / "restored.bin"
        code, _ = run(capsys, "decompress", "-i", str(tmp_path / "out.ghc"), "-o", str(restored))
        assert code == 0
        assert restored.read_bytes() == data

    def test_rotating(self, capsys, tmp_path):
        data = bytes(range(256)) * 8
        code, packed = self.compress_file(capsys, tmp_path, data, "--rotate-seed", "0x1234",
                                          "--rotate-set", "std", "a=-2", "a=-3", "--block", "8")
        assert code == 0
        header = inspect_header(packed)
        assert header.rotation.seed == 0x1234
        assert header.rotation.block_size == 8
        assert len(header.rotation.param_set) == 3
        assert decompress(packed) == data

    def test_rotate_set_needs_seed(self, capsys, tmp_path):
        code, _ = self.compress_file(capsys, tmp_path, b"abc", "--rotate-set", "std")
        assert code == 1

    def test_infeasible(self, capsys, tmp_path):
        code, _ = self.compress_file(capsys, tmp_path, b"abcde", "--seq", "a=-5")
        assert code == 2

    def test_bad_block_size(self, capsys, tmp_path):
        code, _ = self.compress_file(capsys, tmp_path, b"abc", "--rotate-seed", "1", "--block", "0")
        assert code == 1

    def test_garbage_input(self, capsys, tmp_path):
        source = tmp_path / "junk.bin"
        source.write_bytes(b"definitely not a container")
        assert run(capsys, "decompress", "-i", str(source), "-o", str(tmp_path / "x"))[0] == 2

    def test_missing_input(self, capsys, tmp_path):
        assert run(capsys, "decompress", "-i", str(tmp_path / "absent.ghc"))[0] == 2

    def test_summary_goes_to_log_file(self, capsys, tmp_path, mocker):
        log_file = tmp_path / "ghcodes.log"
        mocker.patch("ghcodes.settings.LOG_FILE", str(log_file))
        code, _ = self.compress_file(capsys, tmp_path, b"hello world")
        assert code == 0
        for handler in logging.getLogger().handlers:
            handler.flush()
        assert "=== Compression Summary ===" in log_file.read_text()

    def test_unwritable_log_file(self, capsys, tmp_path, mocker):
        mocker.patch("ghcodes.settings.LOG_FILE", str(tmp_path / "missing" / "ghcodes.log"))
        assert main(["encode", "10"]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert captured.err.startswith("error:")
