import json
import random

import pytest

import diffnet


def tweet(tid, author, **kw):
    t = diffnet.TweetRecord()
    t.tweet_id = tid
    t.author_id = author
    t.timestamp = 100
    t.article_id = "a"
    for k, v in kw.items():
        setattr(t, k, v)
    return t


def test_graph_fixtures():
    path = [(0, 1), (1, 2)]
    assert diffnet.structural_virality(3, path, [0, 1, 2]) == pytest.approx(8 / 6)
    assert diffnet.diameter(3, path, [0, 1, 2]) == 2
    cycle = [(0, 1), (1, 2), (2, 0)]
    assert diffnet.main_kcore_number(3, cycle) == 2
    assert diffnet.average_clustering(3, cycle) == pytest.approx(1.0)
    assert diffnet.strongly_connected_components(3, cycle) == [[0, 1, 2]]
    assert diffnet.weakly_connected_components(4, [(0, 1), (2, 3)]) == [[0, 1], [2, 3]]
    assert diffnet.density(3, [(0, 1)]) == pytest.approx(1 / 6)
    f = diffnet.layer_features(2, [(0, 1)])
    assert f["LWCC"] == 2 and f["SV"] == 1.0


def test_errors_carry_codes():
    with pytest.raises(diffnet.DiffnetError, match="E_INVARIANT"):
        diffnet.structural_virality(2, [], [0, 1])
    with pytest.raises(diffnet.DiffnetError, match="E_ARGUMENT"):
        diffnet.diameter(2, [(0, 1)], [])
    with pytest.raises(diffnet.DiffnetError):
        diffnet.strongly_connected_components(2, [(1, 1)])


def test_network_and_vector():
    r = tweet("t1", "u2", retweet_of="u1")
    q = tweet("t2", "u3", quote_of="u1", mentions=["u4"])
    p = tweet("t3", "solo")
    net = diffnet.build_network("a", [r, q, p])
    assert net.edges("RT") == {("u1", "u2"): 1}
    assert net.edges("Q") == {("u1", "u3"): 1}
    assert net.edges("M") == {("u3", "u4"): 1}
    assert net.pure_tweets == 1 and net.pure_users == 1
    v = net.feature_vector()
    names = diffnet.feature_names()
    assert len(v) == len(names) == 38
    assert names[:2] == ["Q_SCC", "Q_LSCC"] and names[-2:] == ["T", "U"]
    assert v[-2:] == [1.0, 1.0]
    assert len(net.single_layer_vector()) == 11
    assert net.serialize().startswith("# article a\n")


def test_parse_records_round_trip():
    text = "\n".join(
        [
            json.dumps({"tweet_id": "t1", "author_id": "u1", "timestamp": 5, "article_id": "a"}),
            "garbage",
            json.dumps({"tweet_id": "t2", "author_id": "u2", "timestamp": 6, "article_id": "a", "retweet_of": "u1"}),
        ]
    )
    records, stats = diffnet.parse_records(text)
    assert stats["malformed"] == 1
    assert [r.tweet_id for r in records] == ["t1", "t2"]
    assert records[1].retweet_of == "u1"
    again, _ = diffnet.parse_records("\n".join(r.to_json() for r in records))
    assert again == records


def test_model_and_metrics():
    assert diffnet.auroc(["D", "D", "M", "M"], [0.8, 0.3, 0.5, 0.1]) == 0.75
    x = [[-1.0 - i * 0.1] for i in range(10)] + [[1.0 + i * 0.1] for i in range(10)]
    y = ["D"] * 10 + ["M"] * 10
    m = diffnet.train_logistic(x, y, C=1.0)
    assert m.converged
    assert all(b <= a for a, b in zip(m.objective_trace, m.objective_trace[1:]))
    assert m.predict_proba([-2.0]) > 0.5 > m.predict_proba([2.0])

    rng = random.Random(3)
    x = [[rng.gauss(1.0 if i < 50 else 0.0, 1.0), rng.gauss(0, 1)] for i in range(100)]
    y = ["D"] * 50 + ["M"] * 50
    a = diffnet.cross_validate(x, y, folds=5, seed=9)
    b = diffnet.cross_validate(x, y, folds=5, seed=9, jobs=3)
    assert a == b
    assert len(a["folds"]) == 5
    assert 0.5 < a["auroc"][0] <= 1.0


def test_statistics():
    stat, p, rejected = diffnet.ks_two_sample([1, 2, 3], [1, 2, 3, 4])
    assert stat == pytest.approx(0.25)
    assert 0 <= p <= 1 and not rejected
    assert diffnet.chi2_scores([[1.0], [1.0], [0.0], [0.0]], ["D", "D", "M", "M"]) == pytest.approx([2.0])


def test_generator():
    cfg = json.loads(diffnet.default_generator_config())
    cfg["disinformation"]["articles"] = 3
    cfg["mainstream"]["articles"] = 2
    tweets, labels = diffnet.generate_corpus(json.dumps(cfg))
    again, _ = diffnet.generate_corpus(json.dumps(cfg), jobs=2)
    assert tweets == again
    assert labels.splitlines()[0] == "article_id,label,source,bias"
    assert len(labels.splitlines()) == 6
    records, stats = diffnet.parse_records(tweets)
    assert stats["malformed"] == 0 and len(records) > 0
    cfg["mainstream"]["quote_rate"] = 2.0
    with pytest.raises(diffnet.DiffnetError, match="E_ARGUMENT"):
        diffnet.generate_corpus(json.dumps(cfg))
