#pragma once

#include <string>

#include "equifront/front.hpp"
#include "equifront/grid.hpp"
#include "equifront/smooth.hpp"

namespace equifront {

struct RenderOptions {
    enum Format { Ascii, Svg } format = Ascii;
    int scale = 40;         // svg pixels per unit
    bool show_axis = true;
    bool labels = false;    // label cusps and crossings by column index
};

std::string render(const FrontWord& w, const RenderOptions& opt = {});
std::string render(const SmoothWord& d, const RenderOptions& opt = {});
std::string render(const Grid& g, const RenderOptions& opt = {});

}  // namespace equifront
