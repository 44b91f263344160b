#include "elena/verify.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include "elena/bijections.hpp"
#include "elena/enumerate.hpp"

namespace elena {

std::string CheckRecord::line() const {
    std::ostringstream out;
    out << "check=" << claim << " n=" << n << " expected=" << expected << " actual=" << actual
        << " witness='" << witness << "' status=" << (pass ? "pass" : "FAIL");
    return out.str();
}

bool Report::all_pass() const {
    return failure_count() == 0;
}

std::size_t Report::failure_count() const {
    std::size_t fails = 0;
    for (const CheckRecord& r : records)
        if (!r.pass) ++fails;
    return fails;
}

void Report::write(std::ostream& out) const {
    for (const CheckRecord& r : records) out << r.line() << '\n';
}

namespace {

std::string str(const Count& c) {
    return c.str();
}

void sort_records(Report& report) {
    std::stable_sort(report.records.begin(), report.records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) {
                         return a.claim != b.claim ? a.claim < b.claim : a.n < b.n;
                     });
}

CheckRecord check_family_counts(Band band, int end, int n) {
    const FamilySpec spec(band, n, end);
    CheckRecord rec;
    rec.claim = std::string("count.") + (band == kABand ? "A." : "B.") + std::to_string(end);
    rec.n = n;
    const Count brute = count(spec, CountMethod::BruteForce);
    const Count transfer = count(spec, CountMethod::TransferMatrix);
    const Count formula = count(spec, CountMethod::Formula);
    rec.expected = str(formula);
    rec.pass = brute == transfer && transfer == formula;
    if (rec.pass) {
        rec.actual = str(brute);
    } else {
        rec.actual = "brute=" + str(brute) + ";transfer=" + str(transfer);
        rec.witness = spec.name();
    }
    return rec;
}

} // namespace

Report verify_counts(int max_length) {
    Report report;
    for (int n = 0; n <= max_length; ++n) {
        for (int end = 0; end <= 3; ++end)
            report.records.push_back(check_family_counts(kABand, end, n));
        for (int end = -2; end <= 1; ++end)
            report.records.push_back(check_family_counts(kBBand, end, n));

        const UnionCounts u = union_identity_counts(n);
        CheckRecord rec;
        rec.claim = "union.identity";
        rec.n = n;
        rec.expected = str(u.lhs);
        rec.actual = str(u.rhs);
        rec.pass = u.lhs == u.rhs;
        if (!rec.pass) rec.witness = "n=" + std::to_string(n);
        report.records.push_back(rec);
    }
    sort_records(report);
    return report;
}

namespace {

// Tallies one elementwise check across a family sweep.
struct Sweep {
    long long passed = 0;
    std::string witness;

    void note(bool ok, const LatticePath& element) {
        if (ok) {
            ++passed;
        } else if (witness.empty()) {
            witness = element.text();
        }
    }

    CheckRecord record(const std::string& claim, int n, long long total) const {
        CheckRecord rec;
        rec.claim = claim;
        rec.n = n;
        rec.expected = std::to_string(total);
        rec.actual = std::to_string(passed);
        rec.witness = witness;
        rec.pass = passed == total;
        return rec;
    }
};

void verify_even_length(int length, Report& report) {
    const auto family = generate(family_b(length, 0));
    const auto total = static_cast<long long>(family.size());

    Sweep roundtrip, stage_decompose, stage_word, stage_broom, stage_glove, stage_split,
        subclass, membership;
    std::set<std::string> images;
    Count in_a0 = 0, in_a2 = 0;

    for (const LatticePath& b : family) {
        const ElenaWord word = decompose_b_path(b);
        const ElenaTree elena = word_to_elena(word);
        const PlaneTree tree = broom_elena_to_tree(elena);
        const LatticePath a = glove_tree_to_path(tree);
        const TaggedPath image = split_last_two(a);

        stage_decompose.note(compose_b_path(word) == b, b);
        stage_word.note(elena_to_word(elena) == word, b);
        stage_broom.note(broom_tree_to_elena(tree) == elena, b);
        stage_glove.note(glove_path_to_tree(a) == tree, b);
        stage_split.note(join_last_two(image) == a, b);
        roundtrip.note(composite_even_inv(image) == b, b);

        const bool group = last_group_nonempty(elena);
        const bool deep = rightmost_leaf_depth(tree) >= 2;
        const bool double_down = a.steps()[a.length() - 2] == Step::Down;
        subclass.note(group == deep && deep == double_down, b);

        const FamilySpec target = family_a(length, image.tag);
        membership.note((image.tag == 0 || image.tag == 2) && target.contains(image.path), b);
        if (image.tag == 0) ++in_a0;
        if (image.tag == 2) ++in_a2;
        images.insert(std::to_string(image.tag) + ":" + image.path.text());
    }

    report.records.push_back(roundtrip.record("even.roundtrip", length, total));
    report.records.push_back(stage_decompose.record("stage.decompose", length, total));
    report.records.push_back(stage_word.record("stage.word", length, total));
    report.records.push_back(stage_broom.record("stage.broom", length, total));
    report.records.push_back(stage_glove.record("stage.glove", length, total));
    report.records.push_back(stage_split.record("stage.split", length, total));
    report.records.push_back(subclass.record("even.subclass", length, total));
    report.records.push_back(membership.record("even.membership", length, total));

    CheckRecord inj;
    inj.claim = "even.injective";
    inj.n = length;
    inj.expected = std::to_string(total);
    inj.actual = std::to_string(images.size());
    inj.pass = static_cast<long long>(images.size()) == total;
    report.records.push_back(inj);

    CheckRecord img;
    img.claim = "even.image";
    img.n = length;
    img.expected = "A0=" + str(fib(length - 1)) + ",A2=" + str(fib(length));
    img.actual = "A0=" + str(in_a0) + ",A2=" + str(in_a2);
    img.pass = in_a0 == fib(length - 1) && in_a2 == fib(length);
    report.records.push_back(img);
}

void verify_odd_length(int length, Report& report) {
    const auto family = generate(family_b(length, -1));
    const auto total = static_cast<long long>(family.size());

    Sweep roundtrip, subclass, membership;
    std::set<std::string> images;
    Count in_a1 = 0, in_a3 = 0;

    for (const LatticePath& b : family) {
        const TaggedPath image = composite_odd(b);
        roundtrip.note(composite_odd_inv(image) == b, b);

        const FamilySpec target = family_a(length, image.tag);
        membership.note((image.tag == 1 || image.tag == 3) && target.contains(image.path), b);
        if (image.tag == 1) ++in_a1;
        if (image.tag == 3) ++in_a3;
        images.insert(std::to_string(image.tag) + ":" + image.path.text());

        // The appended up-step must put the element in the non-empty-last-
        // group subclass on every route.
        auto steps = b.steps();
        steps.push_back(Step::Up);
        const LatticePath augmented(kBBand, std::move(steps));
        const ElenaTree elena = word_to_elena(decompose_b_path(augmented));
        const PlaneTree tree = broom_elena_to_tree(elena);
        const LatticePath a = glove_tree_to_path(tree);
        const bool all_three = last_group_nonempty(elena) && rightmost_leaf_depth(tree) >= 2 &&
                               a.steps()[a.length() - 2] == Step::Down;
        subclass.note(all_three, b);
    }

    report.records.push_back(roundtrip.record("odd.roundtrip", length, total));
    report.records.push_back(subclass.record("odd.subclass", length, total));
    report.records.push_back(membership.record("odd.membership", length, total));

    CheckRecord inj;
    inj.claim = "odd.injective";
    inj.n = length;
    inj.expected = std::to_string(total);
    inj.actual = std::to_string(images.size());
    inj.pass = static_cast<long long>(images.size()) == total;
    report.records.push_back(inj);

    CheckRecord img;
    img.claim = "odd.image";
    img.n = length;
    img.expected = "A1=" + str(fib(length)) + ",A3=" + str(fib(length - 1));
    img.actual = "A1=" + str(in_a1) + ",A3=" + str(in_a3);
    img.pass = in_a1 == fib(length) && in_a3 == fib(length - 1);
    report.records.push_back(img);
}

} // namespace

Report verify_bijections(int max_length) {
    Report report;
    for (int length = 0; length <= max_length; ++length) {
        if (length % 2 == 0)
            verify_even_length(length, report);
        else
            verify_odd_length(length, report);
    }
    sort_records(report);
    return report;
}

} // namespace elena
