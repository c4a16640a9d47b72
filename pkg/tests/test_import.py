def test_rankred():
    import rankred  # noqa


def test_lazy_objects():
    from rankred import AVAILABLE_SUITES, Graph, PartitionModel, suite  # noqa

    assert "ip-lemma" in AVAILABLE_SUITES
    assert Graph(2, frozenset({(0, 1)})).size == 1


def test_version():
    import rankred

    assert isinstance(rankred.__version__, str)


def test_dir_lists_lazy_names():
    import rankred

    assert {"Graph", "nicify", "suites"} <= set(dir(rankred))
