import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from agckit import raster

gray_images = hnp.arrays(
    dtype=np.uint8,
    shape=hnp.array_shapes(min_dims=2, max_dims=2, min_side=1, max_side=24),
)


def img(rows):
    return np.array(rows, dtype=np.uint8)


class TestHistogram:
    def test_counts_small_image(self):
        h = raster.compute_histogram(img([[0, 0], [0, 100]]))
        assert h[0] == 3 and h[100] == 1 and h.sum() == 4

    def test_single_pixel(self):
        h = raster.compute_histogram(img([[255]]))
        assert h[255] == 1 and h.sum() == 1

    def test_constant_image(self):
        h = raster.compute_histogram(np.full((4, 4), 7, dtype=np.uint8))
        assert h[7] == 16 and h.sum() == 16

    @given(gray_images)
    def test_total_matches_pixel_count(self, image):
        assert raster.compute_histogram(image).sum() == image.size


class TestNormalizeCdf:
    def test_normalize_fractions(self):
        h = np.zeros(256, dtype=np.int64)
        h[0], h[100] = 3, 1
        p = raster.normalize(h)
        assert p[0] == 0.75 and p[100] == 0.25

    def test_normalize_single_level(self):
        h = np.zeros(256, dtype=np.int64)
        h[255] = 1
        assert raster.normalize(h)[255] == 1.0

    def test_normalize_uniform(self):
        p = raster.normalize(np.ones(256, dtype=np.int64))
        assert np.allclose(p, 1 / 256)

    def test_normalize_rejects_empty(self):
        with pytest.raises(ValueError, match="empty"):
            raster.normalize(np.zeros(256, dtype=np.int64))

    def test_cdf_running_sum(self):
        p = np.zeros(256)
        p[0], p[100] = 0.75, 0.25
        c = raster.cdf(p)
        assert np.all(c[:100] == 0.75) and np.all(c[100:] == 1.0)

    def test_cdf_point_mass_at_top(self):
        p = np.zeros(256)
        p[255] = 1.0
        c = raster.cdf(p)
        assert np.all(c[:255] == 0.0) and c[255] == 1.0

    def test_cdf_uniform(self):
        c = raster.cdf(np.full(256, 1 / 256))
        assert np.allclose(c, (np.arange(256) + 1) / 256)

    @given(gray_images)
    @settings(max_examples=60)
    def test_pipeline_cdf_terminates_at_one(self, image):
        c = raster.cdf(raster.normalize(raster.compute_histogram(image)))
        assert abs(c[255] - 1.0) < 1e-9
        assert np.all(np.diff(c) >= 0)
        assert np.all((c >= 0) & (c <= 1 + 1e-9))


class TestApplyLut:
    def test_identity(self):
        image = img([[0, 0], [0, 100]])
        assert np.array_equal(raster.apply_lut(image, raster.identity_lut()), image)

    def test_constant_zero_lut(self):
        out = raster.apply_lut(img([[5, 200]]), np.zeros(256, dtype=np.uint8))
        assert np.all(out == 0)

    def test_table_lookup(self):
        lut = raster.identity_lut()
        lut[100] = 255
        out = raster.apply_lut(img([[0, 0], [0, 100]]), lut)
        assert out.ravel().tolist() == [0, 0, 0, 255]

    def test_rejects_short_lut(self):
        with pytest.raises(ValueError):
            raster.apply_lut(img([[0]]), np.zeros(10, dtype=np.uint8))

    @given(gray_images, st.integers(0, 255))
    @settings(max_examples=40)
    def test_nondecreasing_lut_preserves_order(self, image, seed):
        lut = np.minimum(
            255, np.cumsum(np.random.default_rng(seed).integers(0, 3, 256))
        ).astype(np.uint8)
        out = raster.apply_lut(image, lut)
        flat_in, flat_out = image.ravel(), out.ravel()
        order = np.argsort(flat_in, kind="stable")
        assert np.all(np.diff(flat_out[order].astype(np.int16)) >= 0)


class TestNegate:
    def test_example(self):
        out = raster.negate(img([[255, 255], [255, 155]]))
        assert out.ravel().tolist() == [0, 0, 0, 100]

    def test_all_zero(self):
        assert np.all(raster.negate(np.zeros((3, 3), dtype=np.uint8)) == 255)

    @given(gray_images)
    def test_involution(self, image):
        assert np.array_equal(raster.negate(raster.negate(image)), image)


class TestMeanIntensity:
    @pytest.mark.parametrize(
        "image,expected",
        [
            (np.zeros((5, 5), dtype=np.uint8), 0.0),
            (np.full((3, 7), 255, dtype=np.uint8), 255.0),
            (np.array([[0, 0], [0, 100]], dtype=np.uint8), 25.0),
        ],
    )
    def test_examples(self, image, expected):
        assert raster.mean_intensity(image) == expected


class TestGammaDistort:
    def test_gamma_one_is_identity(self):
        image = img([[0, 17], [128, 255]])
        assert np.array_equal(raster.gamma_distort(image, 1.0), image)

    def test_midpoint_gamma_two(self):
        # 255 * (128/255)**2 = 64.25 -> rounds to 64
        assert raster.gamma_distort(img([[128]]), 2.0)[0, 0] == 64

    @pytest.mark.parametrize("gamma", [0.1, 0.3, 1.0, 2.0, 7.5])
    def test_endpoints_fixed(self, gamma):
        out = raster.gamma_distort(img([[0, 255]]), gamma)
        assert out.ravel().tolist() == [0, 255]

    @pytest.mark.parametrize("gamma", [0.0, -1.0])
    def test_rejects_nonpositive_gamma(self, gamma):
        with pytest.raises(ValueError):
            raster.gamma_distort(img([[1]]), gamma)


class TestRounding:
    def test_half_goes_up(self):
        assert raster.round_half_up(0.5) == 1.0
        assert raster.round_half_up(127.5) == 128.0
        assert raster.round_half_up(np.array([0.4999, 191.25])).tolist() == [0, 191]
