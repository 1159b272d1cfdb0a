"""Tensor file round-trips, schema validation, and display transcription."""

import json
import math

import numpy as np
import pytest

from einalg import (
    EinsteinTensor,
    PairedShape,
    ShapeError,
    load_tensor,
    save_tensor,
    tensor_from_block_display,
    tensor_from_dict,
    tensor_to_dict,
)

from conftest import rand_tensor


class TestRoundTrip:
    def test_dict_round_trip_bit_exact(self, rng):
        t = rand_tensor(rng, (2, 3), (2,))
        assert tensor_from_dict(tensor_to_dict(t)) == t

    def test_file_round_trip_bit_exact(self, tmp_path, rng):
        # shortest-round-trip decimals must survive save/load unchanged,
        # including awkward values
        mat = np.array(
            [[0.1 + 0.3j, 1e-300 - 1e308j], [-0.0 + 7j, math.pi * 1e-17 + 0j]]
        )
        t = EinsteinTensor(PairedShape((2,), (2,)), mat)
        path = tmp_path / "t.json"
        save_tensor(path, t)
        assert load_tensor(path) == t

    def test_file_is_valid_json_with_exact_fields(self, tmp_path, rng):
        t = rand_tensor(rng, (2,), (2,), real=True)
        path = tmp_path / "t.json"
        save_tensor(path, t)
        data = json.loads(path.read_text())
        assert set(data) == {"row_dims", "col_dims", "entries"}
        assert data["row_dims"] == [2]
        assert len(data["entries"]) == 4
        assert all(len(pair) == 2 for pair in data["entries"])


class TestValidation:
    def base(self):
        return {"row_dims": [2], "col_dims": [2], "entries": [[1.0, 0.0]] * 4}

    def test_missing_field(self):
        data = self.base()
        del data["entries"]
        with pytest.raises(ValueError):
            tensor_from_dict(data)

    def test_unexpected_field(self):
        data = self.base()
        data["extra"] = 1
        with pytest.raises(ValueError):
            tensor_from_dict(data)

    def test_wrong_entry_count(self):
        data = self.base()
        data["entries"] = data["entries"][:3]
        with pytest.raises(ValueError):
            tensor_from_dict(data)

    def test_malformed_pair(self):
        data = self.base()
        data["entries"][2] = [1.0]
        with pytest.raises(ValueError):
            tensor_from_dict(data)
        data["entries"][2] = [1.0, "x"]
        with pytest.raises(ValueError):
            tensor_from_dict(data)

    def test_non_integer_dims(self):
        data = self.base()
        data["row_dims"] = [2.0]
        with pytest.raises(ValueError):
            tensor_from_dict(data)

    def test_non_finite_entry(self):
        data = self.base()
        data["entries"][0] = [float("inf"), 0.0]
        with pytest.raises(ValueError):
            tensor_from_dict(data)

    def test_not_an_object(self):
        with pytest.raises(ValueError):
            tensor_from_dict([1, 2, 3])


class TestBlockDisplay:
    def test_diagonal_entries_agree_with_flat_layout(self):
        # entries with i2 == j1 sit at the same spot in both conventions
        disp = np.zeros((4, 4))
        disp[0, 0] = 5.0
        t = tensor_from_block_display(disp, (2, 2), (2, 2))
        assert t.entry((1, 1), (1, 1)) == 5.0
        assert t.matrix[0, 0] == 5.0

    def test_off_diagonal_entries_move(self):
        # display row 1, col 2 holds a_{(1,2),(1,1)}, which lands at flattened
        # row 1 + 2*(2-1) = 3, column 1
        disp = np.zeros((4, 4))
        disp[0, 1] = 7.0
        t = tensor_from_block_display(disp, (2, 2), (2, 2))
        assert t.entry((1, 2), (1, 1)) == 7.0
        assert t.matrix[2, 0] == 7.0
        assert t.matrix[0, 1] == 0.0

    def test_worked_example_block_rule(self, example_a):
        # display row 4, col 3 is entry a_{(2,1),(2,2)}: flattened (2, 4)
        assert example_a.entry((2, 1), (2, 2)) == 1.0
        assert example_a.matrix[1, 3] == 1.0

    def test_singleton_mode_displays_degenerate(self):
        t = tensor_from_block_display([[0, 1], [0, 2]], (2, 2), (1, 1))
        assert t.entry((1, 2), (1, 1)) == 1.0
        assert t.entry((2, 2), (1, 1)) == 2.0
        assert np.array_equal(t.matrix.real.ravel(), [0, 0, 1, 2])

    def test_wrong_display_size(self):
        with pytest.raises(ShapeError):
            tensor_from_block_display(np.zeros((2, 4)), (2, 2), (2, 2))

    def test_only_two_plus_two_modes(self):
        with pytest.raises(ShapeError):
            tensor_from_block_display(np.zeros((2, 2)), (2,), (2,))
