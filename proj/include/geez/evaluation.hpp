#ifndef GEEZ_EVALUATION_HPP
#define GEEZ_EVALUATION_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "geez/training.hpp"

namespace geez {

// Published reference results for this experiment protocol, printed next to
// measured accuracies so runs are comparable at a glance.
inline constexpr double kReferenceTrainAccuracy = 0.9803;
inline constexpr double kReferenceTestAccuracy = 0.653;
inline constexpr double kReferenceOverallAccuracy = 0.8988;

struct Metrics {
    std::size_t n_samples = 0;
    std::size_t n_correct = 0;
    double accuracy = 0.0;
    // confusion[true][predicted], kNumClasses x kNumClasses counts
    std::vector<std::vector<long>> confusion;
    std::vector<double> per_class_accuracy; // NaN for classes with no samples
};

// Forward pass plus prediction decode with the model's encoding.
int predict(const TrainedModel& model, const FeatureVector& x);

// Runs predict over every sample tagged `split` and aggregates counts.
// Sample order never affects the result.
Metrics evaluate(const TrainedModel& model, const Dataset& ds, Split split);

// Count-weighted accuracy over the union of two splits (exact identity:
// pooled = (correct_a + correct_b) / (n_a + n_b)).
double pooled_accuracy(const Metrics& a, const Metrics& b);

// Weighted mean of two accuracies; used to compare reference split values
// against a reference overall figure.
double weighted_mean_accuracy(double acc_a, std::size_t n_a, double acc_b, std::size_t n_b);

struct OverallReport {
    Metrics train;
    Metrics test;
    double pooled = 0.0;
    std::string text; // human-readable table with reference values
};

OverallReport overall_report(const Metrics& train, const Metrics& test);

// metrics_{train,test}.csv (`split,n,correct,accuracy`) and
// confusion_{train,test}.csv (header row of class folders, 20 count rows).
void write_report_csv(const std::filesystem::path& out_dir, const OverallReport& report);

void write_metrics_csv(const std::filesystem::path& path, const std::string& split_name,
                       const Metrics& m);
void write_confusion_csv(const std::filesystem::path& path, const Metrics& m);

} // namespace geez

#endif
