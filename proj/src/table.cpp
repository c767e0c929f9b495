#include "polarcg/table.hpp"

#include <sstream>
#include <thread>
#include <vector>

#include "polarcg/coupling.hpp"
#include "polarcg/recoupling.hpp"

#include <json.hpp>

namespace polarcg::table {

using coupling::CGValue;

namespace {

HalfInt ht(int twice) { return HalfInt::from_twice(twice); }

struct Row {
    std::vector<int> inputs; // doubled quantum numbers
    std::string value;
    std::string squared;
};

std::vector<std::vector<int>> enumerate_keys(int max_2j, What what) {
    std::vector<std::vector<int>> keys;
    switch (what) {
        case What::cg:
            for (int tj1 = 0; tj1 <= max_2j; ++tj1)
              for (int tj2 = 0; tj2 <= max_2j; ++tj2)
                for (int tj3 = std::abs(tj1 - tj2); tj3 <= tj1 + tj2; tj3 += 2)
                  for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
                    for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
                        if (std::abs(tm1 + tm2) > tj3) continue;
                        keys.push_back({tj1, tj2, tj3, tm1, tm2, tm1 + tm2});
                    }
            break;
        case What::threej:
            for (int tj1 = 0; tj1 <= max_2j; ++tj1)
              for (int tj2 = 0; tj2 <= max_2j; ++tj2)
                for (int tj3 = std::abs(tj1 - tj2); tj3 <= std::min(tj1 + tj2, max_2j); tj3 += 2)
                  for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2)
                    for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
                        const int tm3 = -(tm1 + tm2);
                        if (std::abs(tm3) > tj3) continue;
                        keys.push_back({tj1, tj2, tj3, tm1, tm2, tm3});
                    }
            break;
        case What::sixj:
            for (int ta = 0; ta <= max_2j; ++ta)
              for (int tb = 0; tb <= max_2j; ++tb)
                for (int tc = 0; tc <= max_2j; ++tc)
                  for (int td = 0; td <= max_2j; ++td)
                    for (int te = 0; te <= max_2j; ++te)
                      for (int tf = 0; tf <= max_2j; ++tf) {
                          const auto tri = [](int x, int y, int z) {
                              return std::abs(x - y) <= z && z <= x + y && (x + y + z) % 2 == 0;
                          };
                          if (!tri(ta, tb, tc) || !tri(ta, te, tf) || !tri(td, tb, tf) ||
                              !tri(td, te, tc))
                              continue;
                          keys.push_back({ta, tb, tc, td, te, tf});
                      }
            break;
    }
    return keys;
}

Row compute_row(const std::vector<int>& key, What what) {
    CGValue value;
    switch (what) {
        case What::cg:
            value = coupling::cg_oracle_or_zero(ht(key[0]), ht(key[1]), ht(key[2]), ht(key[3]),
                                                ht(key[4]));
            break;
        case What::threej:
            value = coupling::threej(ht(key[0]), ht(key[1]), ht(key[2]), ht(key[3]), ht(key[4]),
                                     ht(key[5]));
            break;
        case What::sixj:
            value = recoupling::sixj(ht(key[0]), ht(key[1]), ht(key[2]), ht(key[3]), ht(key[4]),
                                     ht(key[5]));
            break;
    }
    Row row;
    row.inputs = key;
    row.value = exact::to_string(value.value());
    row.squared = exact::rat_to_string(value.squared());
    return row;
}

const std::vector<std::string>& columns(What what) {
    static const std::vector<std::string> cg_cols{"two_j1", "two_j2", "two_j3", "two_m1",
                                                  "two_m2", "two_m3", "value",  "value_squared"};
    static const std::vector<std::string> threej_cols{"two_j1", "two_j2", "two_j3",
                                                      "two_m1", "two_m2", "two_m3",
                                                      "value",  "value_squared"};
    static const std::vector<std::string> sixj_cols{"two_j1", "two_j2", "two_j3", "two_j4",
                                                    "two_j5", "two_j6", "value",  "value_squared"};
    switch (what) {
        case What::cg: return cg_cols;
        case What::threej: return threej_cols;
        case What::sixj: return sixj_cols;
    }
    throw domain_error("emit_table: unknown table kind");
}

} // namespace

std::string emit_table(int max_2j, What what, Format format, int threads) {
    if (max_2j < 0) throw domain_error("emit_table: negative max_2j");
    if (threads < 1) threads = 1;

    const auto keys = enumerate_keys(max_2j, what);
    std::vector<Row> rows(keys.size());

    // Workers take disjoint index ranges; assembly order is the enumeration
    // order regardless of completion order.
    const std::size_t chunk = (keys.size() + static_cast<std::size_t>(threads) - 1) /
                              static_cast<std::size_t>(threads);
    std::vector<std::thread> workers;
    for (int w = 0; w < threads; ++w) {
        const std::size_t begin = static_cast<std::size_t>(w) * chunk;
        const std::size_t end = std::min(keys.size(), begin + chunk);
        if (begin >= end) break;
        workers.emplace_back([&, begin, end] {
            for (std::size_t i = begin; i < end; ++i) rows[i] = compute_row(keys[i], what);
        });
    }
    for (auto& worker : workers) worker.join();

    const auto& cols = columns(what);
    if (format == Format::csv) {
        std::ostringstream out;
        for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c];
        out << "\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.inputs.size(); ++c)
                out << (c ? "," : "") << row.inputs[c];
            out << "," << row.value << "," << row.squared << "\n";
        }
        return out.str();
    }

    nlohmann::ordered_json doc;
    doc["table"] = (what == What::cg ? "cg" : what == What::threej ? "threej" : "sixj");
    doc["max_2j"] = max_2j;
    doc["columns"] = cols;
    nlohmann::ordered_json json_rows = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json json_row = nlohmann::ordered_json::array();
        for (int v : row.inputs) json_row.push_back(v);
        json_row.push_back(row.value);
        json_row.push_back(row.squared);
        json_rows.push_back(json_row);
    }
    doc["rows"] = json_rows;
    return doc.dump(2) + "\n";
}

What what_from_string(const std::string& name) {
    if (name == "cg") return What::cg;
    if (name == "threej") return What::threej;
    if (name == "sixj") return What::sixj;
    throw domain_error("table: unknown kind '" + name + "' (expected cg|threej|sixj)");
}

Format format_from_string(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw domain_error("table: unknown format '" + name + "' (expected csv|json)");
}

} // namespace polarcg::table
