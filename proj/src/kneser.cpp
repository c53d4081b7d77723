#include <curvecolor/kneser.hpp>

#include <bit>
#include <stdexcept>

namespace curvecolor::kneser
{
    namespace
    {
        auto full_mask(int n) -> SubsetMask
        {
            return n >= 32 ? ~SubsetMask{0} : ((SubsetMask{1} << n) - 1);
        }

        void check_n(int n)
        {
            if (n < 1 || n > 30)
                throw std::invalid_argument("ground set size must lie in 1..30, got " + std::to_string(n));
        }

        // k-subsets of {1..n} in lexicographic order of their sorted elements.
        auto subsets_of_size(int n, int k) -> std::vector<SubsetMask>
        {
            std::vector<SubsetMask> result;
            std::vector<int> pick(k);
            for (int i = 0; i < k; ++i)
                pick[i] = i + 1;
            while (true) {
                result.push_back(mask_of(pick));
                int i = k - 1;
                while (i >= 0 && pick[i] == n - k + i + 1)
                    --i;
                if (i < 0)
                    break;
                ++pick[i];
                for (int j = i + 1; j < k; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
            return result;
        }

        auto labels_of(const std::vector<SubsetMask> & subsets) -> std::vector<std::string>
        {
            std::vector<std::string> labels;
            labels.reserve(subsets.size());
            for (auto s : subsets)
                labels.push_back(subset_label(s));
            return labels;
        }

        void check_kneser_parameters(int n, int k)
        {
            check_n(n);
            if (k < 1 || n < 2 * k)
                throw std::invalid_argument(
                    "Kneser parameters need n >= 2k >= 2, got n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }

    auto subset_label(SubsetMask subset) -> std::string
    {
        std::string out = "{";
        bool first = true;
        for (int e : subset_elements(subset)) {
            out += (first ? "" : ",") + std::to_string(e);
            first = false;
        }
        return out + "}";
    }

    auto subset_elements(SubsetMask subset) -> std::vector<int>
    {
        std::vector<int> elements;
        for (int bit = 0; bit < 32; ++bit)
            if (subset & (SubsetMask{1} << bit))
                elements.push_back(bit + 1);
        return elements;
    }

    auto mask_of(const std::vector<int> & elements) -> SubsetMask
    {
        SubsetMask m = 0;
        for (int e : elements) {
            if (e < 1 || e > 30)
                throw std::invalid_argument("element out of range: " + std::to_string(e));
            m |= SubsetMask{1} << (e - 1);
        }
        return m;
    }

    PartitionVertex::PartitionVertex(int n, SubsetMask either_part) :
        _n(n)
    {
        check_n(n);
        auto all = full_mask(n);
        if (either_part == 0 || (either_part & ~all) != 0 || either_part == all)
            throw std::invalid_argument("not a proper non-empty part of {1.." + std::to_string(n) + "}");
        auto other = all & ~either_part;
        auto size = std::popcount(either_part);
        if (2 * size < n || (2 * size == n && (either_part & 1u)))
            _part = either_part;
        else
            _part = other;
    }

    auto PartitionVertex::complement() const -> SubsetMask
    {
        return full_mask(_n) & ~_part;
    }

    auto PartitionVertex::part_size() const -> int
    {
        return std::popcount(_part);
    }

    auto nested(const PartitionVertex & x, const PartitionVertex & y) -> bool
    {
        auto a = x.part(), b = x.complement(), c = y.part(), d = y.complement();
        return (a & c) == 0 || (a & d) == 0 || (b & c) == 0 || (b & d) == 0;
    }

    auto linked(const CyclicLabel & x, const CyclicLabel & y) -> bool
    {
        return (x.i < y.i && y.i < x.j && x.j < y.j) || (y.i < x.i && x.i < y.j && y.j < x.j);
    }

    auto partition_of(int n, const CyclicLabel & label) -> PartitionVertex
    {
        if (label.i < 1 || label.i >= label.j || label.j > n)
            throw std::invalid_argument("cyclic label needs 1 <= i < j <= n");
        SubsetMask arc = 0;
        for (int e = label.i + 1; e <= label.j; ++e)
            arc |= SubsetMask{1} << (e - 1);
        return {n, arc};
    }

    auto cyclic_label_of(const PartitionVertex & v) -> CyclicLabel
    {
        int n = v.n();
        auto contains = [&](int e) { return (v.part() >> (e - 1)) & 1u; };
        int starts = 0, before = 0;
        for (int e = 1; e <= n; ++e) {
            int prev = e == 1 ? n : e - 1;
            if (contains(e) && ! contains(prev)) {
                ++starts;
                before = prev;
            }
        }
        if (starts != 1)
            throw std::invalid_argument(v.label() + " is not a cyclic interval");
        int last = (before - 1 + v.part_size()) % n + 1;
        return {std::min(before, last), std::max(before, last)};
    }

    auto to_string(const CyclicLabel & label) -> std::string
    {
        return "(" + std::to_string(label.i) + "," + std::to_string(label.j) + ")";
    }

    auto cyclic_interval(int n, int k, int start) -> SubsetMask
    {
        SubsetMask m = 0;
        for (int t = 0; t < k; ++t)
            m |= SubsetMask{1} << ((start - 1 + t) % n);
        return m;
    }

    auto build_kg(int n, int k) -> SubsetGraph
    {
        check_kneser_parameters(n, k);
        auto subsets = subsets_of_size(n, k);
        auto g = Graph::from_predicate(labels_of(subsets),
            [&](VertexIndex u, VertexIndex v) { return (subsets[u] & subsets[v]) == 0; });
        return {n, std::move(subsets), std::move(g)};
    }

    auto build_cg(int n, int k) -> SubsetGraph
    {
        check_kneser_parameters(n, k);
        std::vector<SubsetMask> subsets;
        for (int start = 1; start <= n; ++start)
            subsets.push_back(cyclic_interval(n, k, start));
        auto g = Graph::from_predicate(labels_of(subsets),
            [&](VertexIndex u, VertexIndex v) { return (subsets[u] & subsets[v]) == 0; });
        return {n, std::move(subsets), std::move(g)};
    }

    auto build_total_kg(int n) -> SubsetGraph
    {
        check_n(n);
        if (n < 2)
            throw std::invalid_argument("total Kneser graph needs n >= 2");
        std::vector<SubsetMask> subsets;
        std::vector<PartitionVertex> parts;
        for (int size = 1; 2 * size <= n; ++size)
            for (auto s : subsets_of_size(n, size)) {
                if (2 * size == n && ! (s & 1u))
                    continue;
                subsets.push_back(s);
                parts.emplace_back(n, s);
            }
        auto g = Graph::from_predicate(
            labels_of(subsets), [&](VertexIndex u, VertexIndex v) { return nested(parts[u], parts[v]); });
        return {n, std::move(subsets), std::move(g)};
    }

    auto build_total_cg(int n) -> TotalCyclicGraph
    {
        check_n(n);
        if (n < 2)
            throw std::invalid_argument("total cyclic interval graph needs n >= 2");
        TotalCyclicGraph result{n, {}, {}, {}};
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                result.labels.push_back({i, j});
                result.subsets.push_back(partition_of(n, {i, j}).part());
            }
        const auto & labels = result.labels;
        result.graph = Graph::from_predicate(
            labels_of(result.subsets), [&](VertexIndex u, VertexIndex v) { return ! linked(labels[u], labels[v]); });
        return result;
    }

    auto total_coloring(const PartitionVertex & v) -> TotalColor
    {
        int n = v.n();
        int size = v.part_size();
        if (std::has_single_bit(static_cast<unsigned>(n)) && 2 * size == n)
            return {total_coloring_layers(n), 0, true};

        int k = std::bit_width(static_cast<unsigned>(size)) - 1;
        int l = (1 << (k + 1)) - size;
        auto elements = subset_elements(v.part());
        int a = elements[elements.size() - static_cast<std::size_t>(l)];
        return {k, a, false};
    }

    auto total_coloring_layers(int n) -> int
    {
        if (n < 2)
            throw std::invalid_argument("total colouring needs n >= 2");
        int layers = 0;
        while ((1 << (layers + 1)) < n)
            ++layers;
        return layers;
    }

    auto total_coloring_palette_size(int n) -> std::size_t
    {
        auto size = static_cast<std::size_t>(n) * static_cast<std::size_t>(total_coloring_layers(n));
        if (std::has_single_bit(static_cast<unsigned>(n)))
            ++size;
        return size;
    }

    auto color_id(int n, const TotalColor & c) -> int
    {
        if (c.middle)
            return total_coloring_layers(n) * n;
        return c.k * n + (c.a - 1);
    }

    auto total_coloring_of(const SubsetGraph & total_kg) -> Coloring
    {
        Coloring c;
        c.colors.reserve(total_kg.subsets.size());
        for (auto s : total_kg.subsets)
            c.colors.push_back(color_id(total_kg.n, total_coloring(PartitionVertex(total_kg.n, s))));
        return c;
    }

    auto classical_kneser_coloring(int n, int k, SubsetMask subset) -> int
    {
        check_kneser_parameters(n, k);
        if (std::popcount(subset) != k)
            throw std::invalid_argument(subset_label(subset) + " is not a " + std::to_string(k) + "-subset");
        int least = std::countr_zero(subset) + 1;
        return least <= n - 2 * k + 1 ? least : n - 2 * k + 2;
    }

    auto classical_kneser_coloring_of(const SubsetGraph & kg, int k) -> Coloring
    {
        Coloring c;
        for (auto s : kg.subsets)
            c.colors.push_back(classical_kneser_coloring(kg.n, k, s) - 1);
        return c;
    }

    auto harmonic(int m) -> Rational
    {
        if (m < 0)
            throw std::invalid_argument("harmonic number of a negative index");
        Rational total = 0;
        for (int k = 1; k <= m; ++k)
            total += Rational(1, k);
        return total;
    }

    auto total_fractional_value(int n) -> Rational
    {
        return Rational(n) * harmonic((n - 1) / 2) + Rational(1 - n % 2);
    }
}
