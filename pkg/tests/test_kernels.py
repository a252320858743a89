import numpy as np
import pytest

from dlchar.weyl import ElementStore
from dlchar.weyl import _kernels


def test_env_flag_selects_numpy(monkeypatch):
    monkeypatch.setenv("DLCHAR_NO_NUMBA", "1")
    assert not _kernels.numba_enabled()
    st = ElementStore("B3")
    assert st.size == 48
    assert st.num_conjugacy_classes() == 10


def test_numba_enabled_by_default(monkeypatch):
    monkeypatch.delenv("DLCHAR_NO_NUMBA", raising=False)
    assert _kernels.numba_enabled()


@pytest.mark.parametrize("t", ["A4", "B4", "D4"])
def test_paths_give_identical_stores(t):
    a = ElementStore(t, force_impl="numba")
    b = ElementStore(t, force_impl="numpy")
    assert a.size == b.size
    assert sorted(a.lengths.tolist()) == sorted(b.lengths.tolist())
    assert np.array_equal(np.sort(a.sorted_hashes), np.sort(b.sorted_hashes))
    ca = a.conjugacy_class_ids()
    cb = b.conjugacy_class_ids()
    assert ca.max() == cb.max()
    # identical partitions up to relabeling: compare class-size multisets
    assert sorted(np.bincount(ca).tolist()) == sorted(np.bincount(cb).tolist())


def test_lookup_rejects_non_members():
    st = ElementStore("A2")
    bogus = np.roll(np.arange(st.root_system.nroots, dtype=np.int16), 1)
    with pytest.raises(KeyError):
        st.index_of(bogus)


def test_hash_only_store_small_group():
    # forcing hash-only storage disables element-indexed operations
    st = ElementStore("B3", keep_perms=False)
    assert st.size == 48
    assert st.perms is None
    assert st.length_generating_coeffs()[-1] == 1
    with pytest.raises(RuntimeError):
        st.conjugacy_class_ids()
    with pytest.raises(RuntimeError):
        st.index_of(np.arange(st.root_system.nroots, dtype=np.int16))


@pytest.mark.slow
def test_e7_hash_only_enumeration():
    st = ElementStore("E7")
    assert st.size == 2903040
    assert st.perms is None
    coeffs = st.length_generating_coeffs()
    assert len(coeffs) - 1 == 63
    assert coeffs == coeffs[::-1]
    with pytest.raises(RuntimeError):
        st.conjugacy_class_ids()
