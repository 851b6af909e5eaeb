// temp placeholder
