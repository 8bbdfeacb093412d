#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "diffnet/error.hpp"
#include "diffnet/experiments.hpp"
#include "diffnet/features.hpp"
#include "diffnet/graphops.hpp"
#include "diffnet/ingest.hpp"
#include "diffnet/model.hpp"
#include "diffnet/netbuild.hpp"
#include "diffnet/synth.hpp"

namespace py = pybind11;
using namespace diffnet;

namespace {

NewsClass class_from(const std::string& s) { return parse_news_class(s); }

std::vector<NewsClass> classes_from(const std::vector<std::string>& labels) {
  std::vector<NewsClass> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(class_from(l));
  return out;
}

std::vector<LabeledSample> samples_from(const std::vector<std::vector<double>>& x,
                                        const std::vector<std::string>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("X and y lengths differ");
  std::vector<LabeledSample> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i].features = x[i];
    out[i].label = class_from(y[i]);
  }
  return out;
}

DirectedGraph graph_from(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  return DirectedGraph(n, edges);
}

py::dict report_dict(const EvaluationReport& r) {
  py::dict d;
  py::list folds;
  for (const auto& f : r.folds) {
    py::dict fd;
    fd["auroc"] = f.metrics.auroc;
    fd["precision"] = f.metrics.precision;
    fd["recall"] = f.metrics.recall;
    fd["f1"] = f.metrics.f1;
    fd["train_size"] = f.train_size;
    fd["test_size"] = f.test_size;
    folds.append(fd);
  }
  d["folds"] = folds;
  for (auto [name, s] : {std::pair{"auroc", r.auroc}, std::pair{"precision", r.precision},
                         std::pair{"recall", r.recall}, std::pair{"f1", r.f1}}) {
    d[name] = py::make_tuple(s.mean, s.stddev);
  }
  d["summary"] = summary_line(r);
  return d;
}

ArticleCascade cascade_from(const std::string& article_id, std::vector<TweetRecord> tweets) {
  sort_tweets(tweets);
  ArticleCascade c{article_id, std::move(tweets), {}};
  c.label.article_id = article_id;
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multi-layer diffusion network features and disinformation classification";

  static py::exception<Error> py_error(m, "DiffnetError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = std::string(error_code_name(e.code())) + ": " + e.what();
      PyErr_SetString(py_error.ptr(), msg.c_str());
    }
  });

  py::class_<TweetRecord>(m, "TweetRecord")
      .def(py::init<>())
      .def_readwrite("tweet_id", &TweetRecord::tweet_id)
      .def_readwrite("author_id", &TweetRecord::author_id)
      .def_readwrite("timestamp", &TweetRecord::timestamp)
      .def_readwrite("article_id", &TweetRecord::article_id)
      .def_readwrite("retweet_of", &TweetRecord::retweet_of)
      .def_readwrite("quote_of", &TweetRecord::quote_of)
      .def_readwrite("reply_to", &TweetRecord::reply_to)
      .def_readwrite("mentions", &TweetRecord::mentions)
      .def("to_json", &serialize_record)
      .def("__eq__", [](const TweetRecord& a, const TweetRecord& b) { return a == b; });

  m.def("parse_records", [](const std::string& text) {
    std::istringstream in(text);
    auto parsed = parse_records(in);
    py::dict stats;
    stats["lines"] = parsed.stats.lines;
    stats["malformed"] = parsed.stats.malformed;
    stats["duplicates"] = parsed.stats.duplicates;
    return py::make_tuple(parsed.records, stats);
  }, py::arg("text"), "Parse line-delimited JSON tweets; returns (records, stats).");

  py::class_<MultiLayerNetwork>(m, "MultiLayerNetwork")
      .def_readonly("article_id", &MultiLayerNetwork::article_id)
      .def_readonly("pure_tweets", &MultiLayerNetwork::pure_tweets)
      .def_property_readonly("pure_users", &MultiLayerNetwork::pure_users)
      .def("edges", [](const MultiLayerNetwork& n, const std::string& layer) {
        std::map<std::pair<std::string, std::string>, std::int64_t> out(
            n.layer(parse_layer(layer)).edges().begin(), n.layer(parse_layer(layer)).edges().end());
        return out;
      }, py::arg("layer"), "Edge -> weight map of layer 'Q', 'RT', 'M' or 'R'.")
      .def("user_count", &aggregate_user_count)
      .def("feature_vector", [](const MultiLayerNetwork& n) {
        const auto v = assemble_vector(n);
        return std::vector<double>(v.begin(), v.end());
      })
      .def("single_layer_vector", &single_layer_vector)
      .def("serialize", [](const MultiLayerNetwork& n) {
        std::ostringstream out;
        write_networks(out, {n});
        return out.str();
      });

  m.def("build_network", [](const std::string& article_id, std::vector<TweetRecord> tweets) {
    return build_network(cascade_from(article_id, std::move(tweets)));
  }, py::arg("article_id"), py::arg("tweets"));

  m.def("feature_names", &feature_names);

  // Graph metrics on nodes [0, n) and an edge list.
  m.def("strongly_connected_components",
        [](std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& e) {
          return strongly_connected_components(graph_from(n, e));
        }, py::arg("n"), py::arg("edges"));
  m.def("weakly_connected_components",
        [](std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& e) {
          return weakly_connected_components(graph_from(n, e));
        }, py::arg("n"), py::arg("edges"));
  m.def("diameter", [](std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& e,
                       const std::vector<NodeId>& nodes) {
    return diameter_undirected(graph_from(n, e), nodes);
  }, py::arg("n"), py::arg("edges"), py::arg("nodes"));
  m.def("structural_virality", [](std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& e,
                                  const std::vector<NodeId>& nodes) {
    return structural_virality(graph_from(n, e), nodes);
  }, py::arg("n"), py::arg("edges"), py::arg("nodes"));
  m.def("average_clustering", [](std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& e) {
    return average_clustering(graph_from(n, e));
  }, py::arg("n"), py::arg("edges"));
  m.def("main_kcore_number", [](std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& e) {
    return main_kcore_number(graph_from(n, e));
  }, py::arg("n"), py::arg("edges"));
  m.def("density", [](std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& e) {
    return density(graph_from(n, e));
  }, py::arg("n"), py::arg("edges"));
  m.def("layer_features", [](std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& e) {
    const auto a = extract_layer_features(graph_from(n, e)).to_array();
    py::dict d;
    for (std::size_t i = 0; i < a.size(); ++i) d[py::str(std::string(kLayerMetricNames[i]))] = a[i];
    return d;
  }, py::arg("n"), py::arg("edges"), "The nine layer properties of a graph, keyed by metric name.");

  // Model.
  py::class_<LogisticModel>(m, "LogisticModel")
      .def_readonly("weights", &LogisticModel::weights)
      .def_readonly("intercept", &LogisticModel::intercept)
      .def_readonly("iterations", &LogisticModel::iterations)
      .def_readonly("converged", &LogisticModel::converged)
      .def_readonly("objective_trace", &LogisticModel::objective_trace)
      .def("predict_proba", [](const LogisticModel& lm, const std::vector<double>& x) {
        return lm.predict_proba(x);
      });
  m.def("train_logistic", [](const std::vector<std::vector<double>>& x,
                             const std::vector<std::string>& y, double c, bool balanced) {
    TrainOptions opts;
    opts.C = c;
    opts.balanced = balanced;
    return train_logistic(samples_from(x, y), opts);
  }, py::arg("X"), py::arg("y"), py::arg("C") = 1.0, py::arg("balanced") = false);
  m.def("auroc", [](const std::vector<std::string>& y, const std::vector<double>& scores) {
    return auroc(classes_from(y), scores);
  }, py::arg("y"), py::arg("scores"), "Rank-statistic AUROC with 'D' as the positive class.");
  m.def("cross_validate", [](const std::vector<std::vector<double>>& x,
                             const std::vector<std::string>& y, int folds, double test_fraction,
                             std::uint64_t seed, int jobs) {
    CvConfig cfg;
    cfg.folds = folds;
    cfg.test_fraction = test_fraction;
    cfg.seed = seed;
    cfg.jobs = jobs;
    return report_dict(stratified_shuffle_cv(samples_from(x, y), cfg));
  }, py::arg("X"), py::arg("y"), py::arg("folds") = 10, py::arg("test_fraction") = 0.2,
        py::arg("seed") = 0, py::arg("jobs") = 1);

  m.def("ks_two_sample", [](const std::vector<double>& a, const std::vector<double>& b, double alpha) {
    const auto r = ks_two_sample(a, b, alpha);
    return py::make_tuple(r.statistic, r.p_value, r.rejected);
  }, py::arg("a"), py::arg("b"), py::arg("alpha") = 0.05);
  m.def("chi2_scores", [](const std::vector<std::vector<double>>& x, const std::vector<std::string>& y) {
    return chi2_scores(x, classes_from(y));
  }, py::arg("X"), py::arg("y"));

  // Synthetic corpora.
  m.def("default_generator_config", [] { return to_json(default_generator_config()); });
  m.def("generate_corpus", [](const std::string& config_json, int jobs) {
    const auto corpus = generate_corpus(parse_generator_config(config_json), jobs);
    std::ostringstream tweets, labels;
    write_records(tweets, corpus.tweets);
    write_labels(labels, corpus.labels);
    return py::make_tuple(tweets.str(), labels.str());
  }, py::arg("config_json"), py::arg("jobs") = 1,
        "Returns (tweets JSON lines, labels CSV) for a generator config given as JSON.");

  m.attr("__version__") = "0.1.0";
}
