#include "geez/evaluation.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace geez {

namespace fs = std::filesystem;

int predict(const TrainedModel& model, const FeatureVector& x) {
    const std::vector<double> out = forward_output(model.params, x);
    return decode_prediction(out, model.params.arch.target_encoding);
}

Metrics evaluate(const TrainedModel& model, const Dataset& ds, Split split) {
    const std::vector<std::size_t> idx = ds.indices_of(split);
    if (idx.empty()) throw Error("evaluate: split is empty");

    std::vector<int> predicted(idx.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(idx.size()); ++i)
        predicted[i] = predict(model, ds.samples[idx[i]].features);

    Metrics m;
    m.confusion.assign(kNumClasses, std::vector<long>(kNumClasses, 0));
    m.n_samples = idx.size();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const int truth = ds.samples[idx[i]].label;
        ++m.confusion[truth][predicted[i]];
        if (truth == predicted[i]) ++m.n_correct;
    }
    m.accuracy = static_cast<double>(m.n_correct) / static_cast<double>(m.n_samples);

    m.per_class_accuracy.assign(kNumClasses, std::nan(""));
    for (int c = 0; c < kNumClasses; ++c) {
        long row_total = 0;
        for (int p = 0; p < kNumClasses; ++p) row_total += m.confusion[c][p];
        if (row_total > 0)
            m.per_class_accuracy[c] = static_cast<double>(m.confusion[c][c]) / row_total;
    }
    return m;
}

double pooled_accuracy(const Metrics& a, const Metrics& b) {
    return static_cast<double>(a.n_correct + b.n_correct) /
           static_cast<double>(a.n_samples + b.n_samples);
}

double weighted_mean_accuracy(double acc_a, std::size_t n_a, double acc_b, std::size_t n_b) {
    return (acc_a * static_cast<double>(n_a) + acc_b * static_cast<double>(n_b)) /
           static_cast<double>(n_a + n_b);
}

OverallReport overall_report(const Metrics& train, const Metrics& test) {
    OverallReport rep;
    rep.train = train;
    rep.test = test;
    rep.pooled = pooled_accuracy(train, test);

    std::ostringstream out;
    char line[160];
    out << "split     n      correct  accuracy   reference\n";
    std::snprintf(line, sizeof line, "train     %-6zu %-8zu %-10.4f %.4f\n", train.n_samples,
                  train.n_correct, train.accuracy, kReferenceTrainAccuracy);
    out << line;
    std::snprintf(line, sizeof line, "test      %-6zu %-8zu %-10.4f %.4f\n", test.n_samples,
                  test.n_correct, test.accuracy, kReferenceTestAccuracy);
    out << line;
    std::snprintf(line, sizeof line, "pooled    %-6zu %-8zu %-10.4f %.4f\n",
                  train.n_samples + test.n_samples, train.n_correct + test.n_correct, rep.pooled,
                  kReferenceOverallAccuracy);
    out << line;
    std::snprintf(line, sizeof line,
                  "note: count-weighted mean of the reference split accuracies is %.4f; the "
                  "reference overall figure is %.4f\n",
                  weighted_mean_accuracy(kReferenceTrainAccuracy, train.n_samples,
                                         kReferenceTestAccuracy, test.n_samples),
                  kReferenceOverallAccuracy);
    out << line;
    rep.text = out.str();
    return rep;
}

void write_metrics_csv(const fs::path& path, const std::string& split_name, const Metrics& m) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    char buf[128];
    out << "split,n,correct,accuracy\n";
    std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%.17g\n", split_name.c_str(), m.n_samples,
                  m.n_correct, m.accuracy);
    out << buf;
}

void write_confusion_csv(const fs::path& path, const Metrics& m) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    for (int c = 0; c < kNumClasses; ++c) out << (c ? "," : "") << class_info(c).folder;
    out << "\n";
    for (int t = 0; t < kNumClasses; ++t) {
        for (int p = 0; p < kNumClasses; ++p) out << (p ? "," : "") << m.confusion[t][p];
        out << "\n";
    }
}

void write_report_csv(const fs::path& out_dir, const OverallReport& report) {
    fs::create_directories(out_dir);
    write_metrics_csv(out_dir / "metrics_train.csv", "train", report.train);
    write_metrics_csv(out_dir / "metrics_test.csv", "test", report.test);
    write_confusion_csv(out_dir / "confusion_train.csv", report.train);
    write_confusion_csv(out_dir / "confusion_test.csv", report.test);
}

} // namespace geez
