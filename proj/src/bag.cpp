#include "tncb/bag.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tncb/errors.hpp"

namespace tncb {

int Bag::index_of(std::int64_t id) const {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i].id == id) return static_cast<int>(i);
  return -1;
}

Bag parse_bag_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bag is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError(0, "bag file must be a JSON array");

  Bag bag;
  std::set<std::int64_t> ids;
  for (const auto& obj : doc) {
    if (!obj.is_object() || !obj.contains("id") || !obj.contains("cat") ||
        !obj.contains("orth"))
      throw ParseError(0, "bag entry needs id, cat and orth");
    BagItem item;
    item.id = obj.at("id").get<std::int64_t>();
    if (!ids.insert(item.id).second)
      throw ParseError(0, "duplicate leaf id " + std::to_string(item.id));
    item.sign.cat = Atom{obj.at("cat").get<std::string>()};
    item.sign.orth = obj.at("orth").get<std::string>();
    if (item.sign.orth.empty())
      throw ParseError(0, "empty orth in bag entry " + std::to_string(item.id));
    if (obj.contains("feats")) {
      for (const auto& [feat, val] : obj.at("feats").items()) {
        if (val.is_number_integer()) {
          Index idx = val.get<Index>();
          if (idx < 0)
            throw ParseError(0, "negative index for feature '" + feat + "'");
          item.sign.feats.emplace(feat, idx);
        } else if (val.is_string()) {
          item.sign.feats.emplace(feat, Atom{val.get<std::string>()});
        } else {
          throw ParseError(0, "feature '" + feat +
                                  "' must be an integer index or a string");
        }
      }
    }
    bag.items.push_back(std::move(item));
  }
  return bag;
}

Bag load_bag_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open bag file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bag_json(buf.str());
}

std::string format_bag_json(const Bag& bag) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const BagItem& item : bag.items) {
    nlohmann::ordered_json obj;
    obj["id"] = item.id;
    obj["cat"] = item.sign.cat.name;
    obj["orth"] = item.sign.orth;
    nlohmann::ordered_json feats = nlohmann::ordered_json::object();
    for (const auto& [feat, val] : item.sign.feats) {
      if (const auto* a = std::get_if<Atom>(&val))
        feats[feat] = a->name;
      else
        feats[feat] = std::get<Index>(val);
    }
    obj["feats"] = std::move(feats);
    doc.push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

}  // namespace tncb
