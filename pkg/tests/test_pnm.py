import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis.extra import numpy as hnp

from agckit import pnm

gray_images = hnp.arrays(
    np.uint8, hnp.array_shapes(min_dims=2, max_dims=2, min_side=1, max_side=16)
)
rgb_images = hnp.arrays(
    np.uint8,
    hnp.array_shapes(min_dims=2, max_dims=2, min_side=1, max_side=12).map(
        lambda s: (*s, 3)
    ),
)


class TestDecode:
    def test_p5_binary(self):
        buf = b"P5\n2 2\n255\n\x00\x00\x00\x64"
        out = pnm.decode_pnm(buf)
        assert out.shape == (2, 2)
        assert out.ravel().tolist() == [0, 0, 0, 100]

    def test_p2_ascii(self):
        out = pnm.decode_pnm(b"P2 1 1 255 42")
        assert out.shape == (1, 1) and out[0, 0] == 42

    def test_p6_binary(self):
        out = pnm.decode_pnm(b"P6\n1 1\n255\n\x01\x02\x03")
        assert out.shape == (1, 1, 3)
        assert out.ravel().tolist() == [1, 2, 3]

    def test_comments_skipped(self):
        buf = b"P2\n# a comment\n2 1\n# another\n255\n7 9"
        assert pnm.decode_pnm(buf).ravel().tolist() == [7, 9]

    def test_truncated_binary_payload(self):
        with pytest.raises(pnm.PnmError, match="truncated"):
            pnm.decode_pnm(b"P5\n2 2\n255\n\x00\x00")

    def test_truncated_ascii_payload(self):
        with pytest.raises(pnm.PnmError, match="truncated"):
            pnm.decode_pnm(b"P2 2 2 255 1 2 3")

    def test_wrong_maxval(self):
        with pytest.raises(pnm.UnsupportedFormatError, match="bit depth"):
            pnm.decode_pnm(b"P5\n1 1\n65535\n\x00\x00")

    def test_unknown_magic(self):
        with pytest.raises(pnm.UnsupportedFormatError):
            pnm.decode_pnm(b"P4\n1 1\n\x00")

    def test_ascii_value_out_of_range(self):
        with pytest.raises(pnm.PnmError):
            pnm.decode_pnm(b"P2 1 1 255 300")

    def test_deterministic(self):
        buf = b"P5\n3 1\n255\nabc"
        assert np.array_equal(pnm.decode_pnm(buf), pnm.decode_pnm(buf))


class TestRoundTrip:
    @given(gray_images)
    @settings(max_examples=50)
    def test_gray_binary(self, image):
        assert np.array_equal(pnm.decode_pnm(pnm.encode_pnm(image)), image)

    @given(gray_images)
    @settings(max_examples=30)
    def test_gray_ascii(self, image):
        assert np.array_equal(
            pnm.decode_pnm(pnm.encode_pnm(image, ascii_=True)), image
        )

    @given(rgb_images)
    @settings(max_examples=30)
    def test_color_binary(self, image):
        assert np.array_equal(pnm.decode_pnm(pnm.encode_pnm(image)), image)

    @given(rgb_images)
    @settings(max_examples=20)
    def test_color_ascii(self, image):
        assert np.array_equal(
            pnm.decode_pnm(pnm.encode_pnm(image, ascii_=True)), image
        )

    def test_single_white_pixel_file(self, tmp_path):
        path = tmp_path / "w.pgm"
        pnm.write_image(np.array([[255]], dtype=np.uint8), path)
        assert pnm.read_image(path).tolist() == [[255]]


class TestFiles:
    def test_read_write_gray(self, tmp_path, rng):
        image = rng.integers(0, 256, (9, 13), dtype=np.uint8)
        path = tmp_path / "g.pgm"
        pnm.write_image(image, path)
        assert np.array_equal(pnm.read_image(path), image)

    def test_read_write_color(self, tmp_path, rng):
        image = rng.integers(0, 256, (5, 7, 3), dtype=np.uint8)
        path = tmp_path / "c.ppm"
        pnm.write_image(image, path)
        assert np.array_equal(pnm.read_image(path), image)

    def test_gray_to_ppm_rejected(self, tmp_path):
        with pytest.raises(ValueError, match="PPM"):
            pnm.write_image(np.zeros((2, 2), dtype=np.uint8), tmp_path / "x.ppm")

    def test_color_to_pgm_rejected(self, tmp_path):
        with pytest.raises(ValueError, match="PGM"):
            pnm.write_image(np.zeros((2, 2, 3), dtype=np.uint8), tmp_path / "x.pgm")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            pnm.read_image(tmp_path / "nope.pgm")

    def test_garbage_file(self, tmp_path):
        path = tmp_path / "junk.pgm"
        path.write_bytes(b"not an image at all")
        with pytest.raises(pnm.UnsupportedFormatError):
            pnm.read_image(path)


class TestPng:
    def test_gray_round_trip(self, tmp_path, rng):
        pytest.importorskip("PIL")
        image = rng.integers(0, 256, (8, 6), dtype=np.uint8)
        path = tmp_path / "g.png"
        pnm.write_image(image, path)
        assert np.array_equal(pnm.read_image(path), image)

    def test_color_round_trip(self, tmp_path, rng):
        pytest.importorskip("PIL")
        image = rng.integers(0, 256, (4, 5, 3), dtype=np.uint8)
        path = tmp_path / "c.png"
        pnm.write_image(image, path)
        assert np.array_equal(pnm.read_image(path), image)
